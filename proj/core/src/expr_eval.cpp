#include "isotypic/expr_eval.hpp"

#include <cctype>

namespace isotypic {

ScalarContext<Rational> rational_context() { return ScalarContext<Rational>{Rational(0), {}, {}, {}}; }

ScalarContext<CycValue> cyclotomic_context(int level, const std::map<std::string, std::string>& names) {
  ScalarContext<CycValue> ctx{CycValue(level), {}, {}, {}};
  ctx.dynamic_symbol = [](const std::string& name, CycValue& out) {
    if (name.size() < 2 || name[0] != 'w') return false;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    }
    int n = std::stoi(name.substr(1));
    if (n <= 0) return false;
    out = CycValue::root_of_unity(n, 1);
    return true;
  };
  for (const auto& [name, text] : names) ctx.symbols[name] = evaluate_scalar(text, ctx);
  return ctx;
}

ScalarContext<NumFieldValue> numfield_context(const NumFieldPtr& field) {
  ScalarContext<NumFieldValue> ctx{NumFieldValue(field), {}, {}, {}};
  if (field->degree() > 1) ctx.symbols.insert_or_assign("t", NumFieldValue(field, QPoly(std::vector<Rational>{0, 1})));
  for (const auto& [name, poly] : field->names()) ctx.symbols.insert_or_assign(name, NumFieldValue(field, poly));
  for (std::size_t i = 0; i < field->automorphism_count(); ++i) {
    const std::string& name = field->automorphism_name(i);
    if (name.empty()) continue;
    ctx.functions[name] = [i](const NumFieldValue& v) { return v.apply(i); };
  }
  return ctx;
}

}  // namespace isotypic
