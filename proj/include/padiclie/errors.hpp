#ifndef PADICLIE_ERRORS_HPP
#define PADICLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padiclie {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedType : Error {
  explicit UnsupportedType(const std::string& what) : Error(what) {}
};
struct NegativeValuation : Error {
  explicit NegativeValuation(const std::string& what) : Error(what) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct ZeroElement : Error {
  explicit ZeroElement(const std::string& what) : Error(what) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};
struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& what) : Error(what) {}
};
struct TruncationInsufficient : Error {
  explicit TruncationInsufficient(const std::string& what) : Error(what) {}
};
struct ConvergenceDomain : Error {
  explicit ConvergenceDomain(const std::string& what) : Error(what) {}
};
struct NotCentral : Error {
  explicit NotCentral(const std::string& what) : Error(what) {}
};
struct BaseMismatch : Error {
  explicit BaseMismatch(const std::string& what) : Error(what) {}
};
struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& what) : Error(what) {}
};

}  // namespace padiclie

#endif
