#pragma once

#include <stdexcept>

namespace bolpq {

// Base class of every domain error raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_primes : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

// Raised when an operation needs a primitive q-th root of unity but
// q divides neither p-1 nor p+1.
class no_root_of_unity : public error {
 public:
  using error::error;
};

// gamma lies outside Gamma'' (the sequence would leave the base field).
class not_real_solution : public error {
 public:
  using error::error;
};

// 1 - gamma^{-1} is a power of omega; the sequence would hit 0 or -1.
class bad_gamma : public error {
 public:
  using error::error;
};

class invalid_theta : public error {
 public:
  using error::error;
};

class not_complete_mapping : public error {
 public:
  using error::error;
};

class not_bol_structure : public error {
 public:
  using error::error;
};

class not_uniquely_two_divisible : public error {
 public:
  using error::error;
};

class requires_bruck : public error {
 public:
  using error::error;
};

class enumeration_limit : public error {
 public:
  using error::error;
};

class incompatible_orders : public error {
 public:
  using error::error;
};

}  // namespace bolpq
