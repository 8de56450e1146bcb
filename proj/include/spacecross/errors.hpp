#pragma once

#include <stdexcept>
#include <string>

namespace spacecross {

// Every error carries a stable machine-readable code; the CLI maps the
// category to its exit status.
class Error : public std::runtime_error {
 public:
  enum class Category { Validation, Internal };

  Error(std::string code, const std::string& what, Category cat = Category::Validation)
      : std::runtime_error(what), code_(std::move(code)), category_(cat) {}

  const std::string& code() const noexcept { return code_; }
  Category category() const noexcept { return category_; }

 private:
  std::string code_;
  Category category_;
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& what) : Error("DegenerateInput", what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

struct NotDisjoint : Error {
  explicit NotDisjoint(const std::string& what) : Error("NotDisjoint", what) {}
};

struct DegeneratePosition : Error {
  explicit DegeneratePosition(const std::string& what) : Error("DegeneratePosition", what) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& what)
      : Error("PreconditionViolated", what) {}
};

struct RetryExhausted : Error {
  explicit RetryExhausted(const std::string& what)
      : Error("RetryExhausted", what, Category::Internal) {}
};

// A postcondition that mathematics guarantees did not hold: always a bug.
struct InvariantFailure : Error {
  explicit InvariantFailure(const std::string& what)
      : Error("InvariantFailure", what, Category::Internal) {}
};

}  // namespace spacecross
