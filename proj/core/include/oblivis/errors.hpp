#pragma once

#include <stdexcept>
#include <string>

namespace oblivis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on an argument was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A value claimed to be a group element lies outside the order-q subgroup.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// The sender-side product check on a final query failed.
class AbortError : public Error {
 public:
  using Error::Error;
};

class KeyMismatchError : public Error {
 public:
  using Error::Error;
};

/// A plaintext does not fit the homomorphic plaintext space.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// No response slot decrypted to the expected tag.
class RetrievalError : public Error {
 public:
  using Error::Error;
};

/// More than one response slot decrypted to the expected tag.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Misuse of per-session state, for example reusing single-use pad keys.
class SessionStateError : public Error {
 public:
  using Error::Error;
};

}  // namespace oblivis
