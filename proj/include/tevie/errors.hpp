// Copyright (c) 2026 The tevie Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TEVIE_ERRORS_HPP
#define TEVIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tevie {

/// Invalid mathematical input (argument outside a function's domain).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent or malformed problem description (sizes, finiteness, files).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured resource budget.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically singular matrix encountered in a direct solve.
class singular_error : public std::runtime_error {
 public:
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

/// A series or quadrature failed to reach its accuracy target.
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative or eigenvalue algorithm failed to converge.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tevie

#endif  // TEVIE_ERRORS_HPP
