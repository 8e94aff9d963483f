#include "nt/weights.hpp"

#include <stdexcept>

namespace nt {

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "float"; }

EvalMode parse_eval_mode(const std::string& name) {
  if (name == "exact") return EvalMode::Exact;
  if (name == "float") return EvalMode::Float;
  throw std::invalid_argument("unknown evaluation mode '" + name + "' (expected exact|float)");
}

double weight_value(const Weight& w) {
  if (const auto* f = std::get_if<LogForm>(&w)) return f->eval();
  return std::get<double>(w);
}

}  // namespace nt
