#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

/// Base of every error raised by the library. `category()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Category { kValidation, kNumerical, kIo };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Category::kValidation, what) {}
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(Category::kIo, path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(Category::kNumerical, what) {}
};

/// Working precision was too low for the answer to be trusted.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what) : Error(Category::kNumerical, what) {}
};

class InvalidPolarization : public Error {
 public:
  explicit InvalidPolarization(const std::string& what) : Error(Category::kValidation, what) {}
};

class StepTooLarge : public Error {
 public:
  explicit StepTooLarge(const std::string& what) : Error(Category::kNumerical, what) {}
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& what) : Error(Category::kValidation, what) {}
};

}  // namespace zeno
