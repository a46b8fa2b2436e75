#include "sfg/decimation.hpp"

#include <algorithm>
#include <string>

#include "sfg/errors.hpp"

namespace sfg {
namespace {

enum QuantityIndex { kFM, kNM, kFI, kNI, kFD, kND };

int index_of(Quantity q) {
  const int base = q.model == Model::Fractal ? 0 : 1;
  switch (q.problem) {
    case Problem::Matching: return base;
    case Problem::IndependentSet: return 2 + base;
    case Problem::DominatingSet: return 4 + base;
  }
  return base;
}

using Table = std::vector<Term>;

// Candidates of each max/min recurrence, transcribed term by term.
struct Recurrence {
  std::array<Table, 3> terms;
};

const Recurrence& recurrence(int index) {
  static const std::array<Recurrence, 6> all = {{
      // fractal matching
      {{Table{{{4, 0, 0}, 1}, {{3, 1, 0}, 0}, {{2, 2, 0}, 0}},
        Table{{{3, 1, 0}, 1}, {{3, 0, 1}, 0}, {{2, 2, 0}, 0}, {{2, 1, 1}, 0}, {{1, 3, 0}, 0}},
        Table{{{2, 2, 0}, 1},
              {{2, 1, 1}, 0},
              {{1, 3, 0}, 0},
              {{2, 0, 2}, 0},
              {{1, 2, 1}, 0},
              {{0, 4, 0}, 0}}}},
      // non-fractal matching
      {{Table{{{4, 0, 0}, 0}, {{3, 1, 0}, 0}, {{2, 2, 0}, 0}},
        Table{{{3, 1, 0}, 0}, {{3, 0, 1}, 0}, {{2, 2, 0}, 0}, {{2, 1, 1}, 0}, {{1, 3, 0}, 0}},
        Table{{{2, 2, 0}, 0},
              {{2, 1, 1}, 0},
              {{1, 3, 0}, 0},
              {{2, 0, 2}, 0},
              {{1, 2, 1}, 0},
              {{0, 4, 0}, 0},
              {{4, 0, 0}, 1},
              {{3, 1, 0}, 1},
              {{2, 2, 0}, 1}}}},
      // fractal independence
      {{Table{{{4, 0, 0}, 0}, {{2, 2, 0}, -1}},
        Table{{{2, 2, 0}, -1}, {{1, 2, 1}, -2}},
        Table{{{0, 2, 2}, -3}, {{0, 4, 0}, -2}}}},
      // non-fractal independence; no independent set holds both adjacent hubs
      {{Table{{{4, 0, 0}, 0}, {{2, 2, 0}, -1}, {{0, 4, 0}, -2}}, Table{{{2, 2, 0}, -1}}, Table{}}},
      // fractal domination (k = 1 filled in per GammaOneForm)
      {{Table{{{4, 0, 0}, 0}, {{2, 2, 0}, -1}, {{0, 4, 0}, -2}}, Table{},
        Table{{{0, 4, 0}, -2}, {{0, 2, 2}, -3}, {{0, 0, 4}, -4}}}},
      // non-fractal domination
      {{Table{{{4, 0, 0}, 0}, {{2, 2, 0}, -1}, {{0, 4, 0}, -2}}, Table{},
        Table{{{0, 4, 0}, -2}, {{0, 2, 2}, -3}, {{0, 0, 4}, -4}}}},
  }};
  return all[static_cast<std::size_t>(index)];
}

const Table& gamma_one(GammaOneForm form) {
  static const Table literal{{{2, 2, 0}, -1}, {{1, 3, 0}, -2}, {{0, 2, 2}, -3}};
  static const Table corrected{{{2, 2, 0}, -1}, {{1, 2, 1}, -2}, {{0, 2, 2}, -3}};
  return form == GammaOneForm::Literal ? literal : corrected;
}

std::int64_t pow2i(int e) { return std::int64_t{1} << e; }

std::int64_t exact_third(std::int64_t numerator, const char* formula, int n) {
  if (numerator % 3 != 0) {
    throw Error(std::string("closed form ") + formula + " is not an integer at n = " +
                std::to_string(n));
  }
  return numerator / 3;
}

struct Formula {
  const char* text;
  int first_level;
  std::int64_t (*eval)(int n);
};

// Headline closed forms by quantity index.
const std::array<Formula, 6>& headline_formulas() {
  static const std::array<Formula, 6> all = {{
      {"(4^n + 2)/3", 1, [](int n) { return exact_third(pow2i(2 * n) + 2, "(4^n + 2)/3", n); }},
      {"(2^(2n-1) + 4)/3", 1,
       [](int n) { return exact_third(pow2i(2 * n - 1) + 4, "(2^(2n-1) + 4)/3", n); }},
      {"2^(2n-2)", 2, [](int n) { return pow2i(2 * n - 2); }},
      {"2^(2n-1)", 1, [](int n) { return pow2i(2 * n - 1); }},
      {"(5*2^(2n-4) + 4)/3", 2,
       [](int n) { return exact_third(5 * pow2i(2 * n - 4) + 4, "(5*2^(2n-4) + 4)/3", n); }},
      {"(2^(2n-3) + 4)/3", 3,
       [](int n) { return exact_third(pow2i(2 * n - 3) + 4, "(2^(2n-3) + 4)/3", n); }},
  }};
  return all;
}

// Component closed forms; a null text marks an infeasible component.
const std::array<std::array<Formula, 3>, 6>& component_formulas() {
  static const std::array<std::array<Formula, 3>, 6> all = {{
      {{{"(4^n - 1)/3", 1, [](int n) { return exact_third(pow2i(2 * n) - 1, "(4^n - 1)/3", n); }},
        {"(4^n - 1)/3", 1, [](int n) { return exact_third(pow2i(2 * n) - 1, "(4^n - 1)/3", n); }},
        {"(4^n + 2)/3", 1,
         [](int n) { return exact_third(pow2i(2 * n) + 2, "(4^n + 2)/3", n); }}}},
      {{{"(2^(2n-1) - 2)/3", 1,
         [](int n) { return exact_third(pow2i(2 * n - 1) - 2, "(2^(2n-1) - 2)/3", n); }},
        {"(2^(2n-1) + 1)/3", 1,
         [](int n) { return exact_third(pow2i(2 * n - 1) + 1, "(2^(2n-1) + 1)/3", n); }},
        {"(2^(2n-1) + 4)/3", 1,
         [](int n) { return exact_third(pow2i(2 * n - 1) + 4, "(2^(2n-1) + 4)/3", n); }}}},
      {{{"2^(2n-2)", 1, [](int n) { return pow2i(2 * n - 2); }},
        {"2^(2n-2) - 2^(n-1) + 1", 1,
         [](int n) { return pow2i(2 * n - 2) - pow2i(n - 1) + 1; }},
        {"2^(2n-2) - (n-1)*2^(n-1) + 1", 1,
         [](int n) { return pow2i(2 * n - 2) - (n - 1) * pow2i(n - 1) + 1; }}}},
      {{{"2^(2n-1)", 1, [](int n) { return pow2i(2 * n - 1); }},
        {"2^(2n-1) - 2^n + 1", 1, [](int n) { return pow2i(2 * n - 1) - pow2i(n) + 1; }},
        {nullptr, 0, nullptr}}},
      {{{"(5*2^(2n-4) + 3*2^(n-1) - 2)/3", 2,
         [](int n) {
           return exact_third(5 * pow2i(2 * n - 4) + 3 * pow2i(n - 1) - 2,
                              "(5*2^(2n-4) + 3*2^(n-1) - 2)/3", n);
         }},
        {"(5*2^(2n-4) + 3*2^(n-2) + 1)/3", 2,
         [](int n) {
           return exact_third(5 * pow2i(2 * n - 4) + 3 * pow2i(n - 2) + 1,
                              "(5*2^(2n-4) + 3*2^(n-2) + 1)/3", n);
         }},
        {"(5*2^(2n-4) + 4)/3", 2,
         [](int n) { return exact_third(5 * pow2i(2 * n - 4) + 4, "(5*2^(2n-4) + 4)/3", n); }}}},
      {{{"(2^(2n-3) + 3*2^n - 2)/3", 4,
         [](int n) {
           return exact_third(pow2i(2 * n - 3) + 3 * pow2i(n) - 2, "(2^(2n-3) + 3*2^n - 2)/3", n);
         }},
        {"(2^(2n-3) + 3*2^(n-1) + 1)/3", 3,
         [](int n) {
           return exact_third(pow2i(2 * n - 3) + 3 * pow2i(n - 1) + 1,
                              "(2^(2n-3) + 3*2^(n-1) + 1)/3", n);
         }},
        {"(2^(2n-3) + 4)/3", 3,
         [](int n) { return exact_third(pow2i(2 * n - 3) + 4, "(2^(2n-3) + 4)/3", n); }}}},
  }};
  return all;
}

std::int64_t evaluate(const Formula& f, Quantity q, int n, int first_level) {
  if (n < first_level || n > kMaxSizeLevel) {
    throw RangeError(std::string("closed form ") + f.text + " for " + to_string(q) +
                     " holds for " + std::to_string(first_level) + " <= n <= " +
                     std::to_string(kMaxSizeLevel) + ", got n = " + std::to_string(n));
  }
  return f.eval(n);
}

void check_size_level(Quantity q, int n) {
  if (n < size_base_level(q)) {
    throw UsageError("size recurrence for " + to_string(q) + " starts at n = " +
                     std::to_string(size_base_level(q)) + ", got n = " + std::to_string(n));
  }
  if (n > kMaxSizeLevel) {
    throw CapabilityError("size recurrence limited to n <= " + std::to_string(kMaxSizeLevel));
  }
}

void check_bits(const BigInt& value, const CountOptions& options, Quantity q, int n) {
  if (bit_length(value) > options.bit_budget) {
    throw CapabilityError("count for " + to_string(q) + " at n = " + std::to_string(n) +
                          " exceeds the bit budget of " + std::to_string(options.bit_budget));
  }
}

BigInt fourth_power(const BigInt& v) {
  BigInt sq = v * v;
  return sq * sq;
}

}  // namespace

std::array<Quantity, 6> all_quantities() {
  return {{{Model::Fractal, Problem::Matching},
           {Model::NonFractal, Problem::Matching},
           {Model::Fractal, Problem::IndependentSet},
           {Model::NonFractal, Problem::IndependentSet},
           {Model::Fractal, Problem::DominatingSet},
           {Model::NonFractal, Problem::DominatingSet}}};
}

std::string to_string(Quantity q) {
  return std::string(to_string(q.model)) + "/" + std::string(to_string(q.problem));
}

int size_base_level(Quantity q) {
  static constexpr std::array<int, 6> levels{1, 1, 1, 1, 2, 3};
  return levels[static_cast<std::size_t>(index_of(q))];
}

int count_base_level(Quantity q) { return q.problem == Problem::DominatingSet ? 2 : 1; }

std::int64_t SizeTriple::headline() const {
  std::optional<std::int64_t> best;
  for (const auto& v : s) {
    if (!v) continue;
    if (!best) {
      best = v;
    } else if (problem == Problem::DominatingSet) {
      best = std::min(*best, *v);
    } else {
      best = std::max(*best, *v);
    }
  }
  if (!best) throw Error("size triple has no feasible component");
  return *best;
}

std::span<const Term> recurrence_terms(Quantity q, int k, const RecursionOptions& options) {
  if (k < 0 || k > 2) throw UsageError("component index k must be 0, 1 or 2");
  if (q.problem == Problem::DominatingSet && k == 1) return gamma_one(options.gamma_one);
  return recurrence(index_of(q)).terms[static_cast<std::size_t>(k)];
}

SizeTriple size_seed(Quantity q) {
  using S = std::optional<std::int64_t>;
  static const std::array<std::array<S, 3>, 6> seeds = {{
      {S{1}, S{1}, S{2}},
      {S{0}, S{1}, S{2}},
      {S{1}, S{1}, S{2}},
      {S{2}, S{1}, std::nullopt},
      {S{4}, S{3}, S{3}},
      {S{8}, S{7}, S{4}},
  }};
  SizeTriple t;
  t.level = size_base_level(q);
  t.problem = q.problem;
  t.s = seeds[static_cast<std::size_t>(index_of(q))];
  return t;
}

std::vector<LevelRecord> size_trajectory(Quantity q, int n, const RecursionOptions& options) {
  check_size_level(q, n);
  std::vector<LevelRecord> levels;
  levels.push_back({size_seed(q), {}});
  const bool minimize = q.problem == Problem::DominatingSet;
  for (int level = levels.front().sizes.level + 1; level <= n; ++level) {
    const SizeTriple& prev = levels.back().sizes;
    LevelRecord next;
    next.sizes.level = level;
    next.sizes.problem = q.problem;
    for (int k = 0; k < 3; ++k) {
      const auto terms = recurrence_terms(q, k, options);
      std::vector<std::optional<std::int64_t>> values;
      for (const Term& term : terms) {
        std::optional<std::int64_t> v = term.constant;
        for (int j = 0; j < 3; ++j) {
          if (term.c[j] == 0) continue;
          if (!prev.s[j]) {
            v.reset();
            break;
          }
          *v += term.c[j] * *prev.s[j];
        }
        values.push_back(v);
      }
      std::optional<std::int64_t> best;
      for (const auto& v : values) {
        if (v && (!best || (minimize ? *v < *best : *v > *best))) best = v;
      }
      next.sizes.s[k] = best;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (best && values[i] == best) next.attaining[k].push_back(static_cast<int>(i));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

SizeTriple size_recursion(Quantity q, int n, const RecursionOptions& options) {
  return size_trajectory(q, n, options).back().sizes;
}

int headline_first_level(Quantity q) {
  return headline_formulas()[static_cast<std::size_t>(index_of(q))].first_level;
}

std::optional<int> component_first_level(Quantity q, int k) {
  if (k < 0 || k > 2) throw UsageError("component index k must be 0, 1 or 2");
  const Formula& f =
      component_formulas()[static_cast<std::size_t>(index_of(q))][static_cast<std::size_t>(k)];
  if (f.text == nullptr) return std::nullopt;
  return f.first_level;
}

int headline_stated_first_level(Quantity q) {
  return index_of(q) == kFI ? 1 : headline_first_level(q);
}

std::int64_t headline_closed_form(Quantity q, int n, ClosedFormRange range) {
  const int first =
      range == ClosedFormRange::Enforced ? headline_first_level(q) : headline_stated_first_level(q);
  return evaluate(headline_formulas()[static_cast<std::size_t>(index_of(q))], q, n, first);
}

std::int64_t component_closed_form(Quantity q, int k, int n) {
  if (!component_first_level(q, k)) {
    throw RangeError(to_string(q) + " component k = " + std::to_string(k) +
                     " is infeasible and has no closed form");
  }
  const Formula& f =
      component_formulas()[static_cast<std::size_t>(index_of(q))][static_cast<std::size_t>(k)];
  return evaluate(f, q, n, f.first_level);
}

SizeClosedForm size_closed_form(Quantity q, int n) {
  SizeClosedForm out;
  out.headline = headline_closed_form(q, n);
  for (int k = 0; k < 3; ++k) {
    const auto first = component_first_level(q, k);
    if (first && n >= *first) out.components[k] = component_closed_form(q, k, n);
  }
  return out;
}

const BigInt& CountState::headline(Problem problem) const {
  const std::optional<BigInt>* field = nullptr;
  switch (problem) {
    case Problem::Matching: field = &theta; break;
    case Problem::IndependentSet: field = &x; break;
    case Problem::DominatingSet: field = &y; break;
  }
  if (field == nullptr || !field->has_value()) throw Error("count state lacks the headline field");
  return **field;
}

std::vector<CountState> count_trajectory(Quantity q, int n, const CountOptions& options) {
  const int base = count_base_level(q);
  if (n < base) {
    throw UsageError("count recurrence for " + to_string(q) + " starts at n = " +
                     std::to_string(base) + ", got n = " + std::to_string(n));
  }
  CountState s;
  s.level = base;
  switch (index_of(q)) {
    case kFM: s.theta = 2; s.phi = 1; break;
    case kNM: s.theta = 2; s.phi = 1; s.varphi = 2; break;
    case kFI: s.x = 2; break;
    case kNI: s.x = 1; break;
    case kFD: s.y = 2; break;
    case kND: s.y = 1; break;
  }
  std::vector<CountState> levels{s};
  for (int level = base + 1; level <= n; ++level) {
    const CountState& p = levels.back();
    CountState next;
    next.level = level;
    switch (index_of(q)) {
      case kFM: {
        const BigInt tp = *p.theta * *p.phi;
        next.theta = 2 * tp * tp;
        next.phi = fourth_power(*p.phi);
        break;
      }
      case kNM: {
        const BigInt& t = *p.theta;
        const BigInt& f = *p.phi;
        const BigInt& v = *p.varphi;
        const BigInt v2 = v * v;
        next.theta = 2 * t * t * f * f + 2 * v2 * v2 + 12 * t * f * v2;
        next.phi = 4 * f * f * v2;
        next.varphi = 4 * t * f * f * v + 4 * f * v2 * v;
        break;
      }
      case kFI:
      case kNI: next.x = fourth_power(*p.x); break;
      case kFD:
      case kND: next.y = fourth_power(*p.y); break;
    }
    for (const auto* field : {&next.theta, &next.phi, &next.varphi, &next.x, &next.y}) {
      if (*field) check_bits(**field, options, q, level);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

CountState count_recursion(Quantity q, int n, const CountOptions& options) {
  return count_trajectory(q, n, options).back();
}

std::optional<BigInt> count_closed_form(Quantity q, int n, const CountOptions& options) {
  if (n < count_base_level(q)) {
    throw UsageError("count closed form for " + to_string(q) + " starts at n = " +
                     std::to_string(count_base_level(q)) + ", got n = " + std::to_string(n));
  }
  auto power_of_two = [&](int exponent_log2) {
    // 2^(2^e) has 2^e + 1 bits.
    if (exponent_log2 >= 63 ||
        (std::uint64_t{1} << exponent_log2) + 1 > options.bit_budget) {
      throw CapabilityError("count closed form for " + to_string(q) + " at n = " +
                            std::to_string(n) + " exceeds the bit budget");
    }
    return pow2(std::uint64_t{1} << exponent_log2);
  };
  switch (index_of(q)) {
    case kFM: {
      if (n >= 63 || (std::uint64_t{1} << n) > options.bit_budget) {
        throw CapabilityError("count closed form for " + to_string(q) + " at n = " +
                              std::to_string(n) + " exceeds the bit budget");
      }
      return pow2((std::uint64_t{1} << n) - 1);
    }
    case kNM: return std::nullopt;
    case kFI: return power_of_two(2 * n - 2);
    case kFD: return power_of_two(2 * n - 4);
    default: return BigInt(1);
  }
}

SelfCheckReport self_check(Quantity q, int n_max, const RecursionOptions& recursion,
                           const CountOptions& counts) {
  SelfCheckReport report;
  report.quantity = q;
  report.n_max = n_max;
  const int first = std::min(size_base_level(q), count_base_level(q));
  report.levels_checked = std::max(0, n_max - first + 1);
  auto flag = [&](int level, std::string field, std::string rec, std::string closed) {
    report.mismatches.push_back({level, std::move(field), std::move(rec), std::move(closed)});
  };

  if (n_max >= size_base_level(q)) {
    for (const LevelRecord& rec : size_trajectory(q, n_max, recursion)) {
      const SizeTriple& t = rec.sizes;
      for (int k = 0; k < 3; ++k) {
        const auto from = component_first_level(q, k);
        if (!from || t.level < *from) continue;
        const std::int64_t closed = component_closed_form(q, k, t.level);
        if (t.s[k] != closed) {
          flag(t.level, "s" + std::to_string(k), t.s[k] ? std::to_string(*t.s[k]) : "infeasible",
               std::to_string(closed));
        }
      }
      if (t.level >= headline_first_level(q)) {
        const std::int64_t closed = headline_closed_form(q, t.level);
        if (t.headline() != closed) {
          flag(t.level, "headline", std::to_string(t.headline()), std::to_string(closed));
        }
      }
    }
  }
  if (n_max >= count_base_level(q)) {
    for (const CountState& s : count_trajectory(q, n_max, counts)) {
      const auto closed = count_closed_form(q, s.level, counts);
      if (closed && s.headline(q.problem) != *closed) {
        flag(s.level, "count", to_decimal(s.headline(q.problem)), to_decimal(*closed));
      }
    }
  }
  return report;
}

}  // namespace sfg
