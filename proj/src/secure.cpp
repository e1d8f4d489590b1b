#include "gmsr/secure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gmsr/repair.hpp"

namespace gmsr {

namespace {

std::size_t choose2(std::size_t v) { return v * (v > 0 ? v - 1 : 0) / 2; }

// q^e, saturating at limit + 1.
std::uint64_t bounded_pow(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out *= q;
    if (out > limit) return limit + 1;
  }
  return out;
}

// Calls fn on every ascending combination of `size` items from `items`.
template <typename Fn>
void for_each_combination(const std::vector<std::uint32_t>& items, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint32_t> pick(size);
  if (size > items.size()) return;
  while (true) {
    for (std::size_t i = 0; i < size; ++i) pick[i] = items[idx[i]];
    fn(pick);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == items.size() - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

using Histogram = std::unordered_map<std::string, std::uint64_t>;

std::string key_of(const std::vector<Symbol>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Symbol));
}

// Sum of positive parts of h1 - h2; equals total variation times the
// number of random assignments.
std::uint64_t tv_excess(const Histogram& h1, const Histogram& h2) {
  std::uint64_t excess = 0;
  for (const auto& [key, c1] : h1) {
    auto it = h2.find(key);
    std::uint64_t c2 = it == h2.end() ? 0 : it->second;
    if (c1 > c2) excess += c1 - c2;
  }
  return excess;
}

// Odometer over GF(q)^digits; `on_step(i)` is called for each digit i that
// advanced (including wraps), so callers can add column i incrementally.
template <typename Step>
bool odometer_next(std::vector<Symbol>& digits, std::uint32_t q, Step&& on_step) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    on_step(i);
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t SecureLayout::group_size(RandomGroup g) const {
  return static_cast<std::size_t>(std::count(random_groups.begin(), random_groups.end(), g));
}

SecureLayout secure_layout(const CodeParams& params, std::uint32_t l, std::uint32_t lp) {
  if (params.type == MatrixType::IV || params.type == MatrixType::V) {
    throw UnsupportedType("secure layouts need k >= 2 (type " +
                          std::string(to_string(params.type)) + ")");
  }
  if (l >= params.k) {
    throw BudgetError("l = " + std::to_string(l) + " must be below k = " +
                      std::to_string(params.k));
  }
  if (lp > l) {
    throw BudgetError("l' = " + std::to_string(lp) + " exceeds l = " + std::to_string(l));
  }

  SecureLayout layout;
  layout.params = params;
  layout.l = l;
  layout.lp = lp;
  for (const Position& pos : free_positions(params)) {
    if (pos.row < params.alpha) {
      if (pos.row < l) {
        layout.random_positions.push_back(pos);
        layout.random_groups.push_back(RandomGroup::W1Rows);
        continue;
      }
    } else {
      const std::size_t r = pos.row - params.alpha;  // local T2 row, r <= col
      if (l >= 1 && pos.col + 1 < l) {
        layout.random_positions.push_back(pos);
        layout.random_groups.push_back(RandomGroup::T2Corner);
        continue;
      }
      if (r < lp) {
        layout.random_positions.push_back(pos);
        layout.random_groups.push_back(RandomGroup::T2Rows);
        continue;
      }
    }
    layout.message_positions.push_back(pos);
  }

  const std::size_t expected = static_cast<std::size_t>(l) * params.alpha +
                               static_cast<std::size_t>(params.k - l) * lp;
  if (layout.R() != expected ||
      layout.group_size(RandomGroup::W1Rows) != l * params.alpha - choose2(l) ||
      layout.group_size(RandomGroup::T2Corner) != choose2(l)) {
    throw std::logic_error("secure layout size mismatch");
  }
  if (layout.R() >= params.B) {
    throw NoMessageCapacity("R = " + std::to_string(layout.R()) +
                            " random symbols leave no room in B = " + std::to_string(params.B));
  }
  return layout;
}

MessageMatrix secure_build(const SecureLayout& layout, std::span<const Symbol> random_symbols,
                           std::span<const Symbol> message_symbols) {
  if (random_symbols.size() != layout.R() || message_symbols.size() != layout.capacity()) {
    throw LengthMismatch("expected " + std::to_string(layout.R()) + " random and " +
                         std::to_string(layout.capacity()) + " message symbols, got " +
                         std::to_string(random_symbols.size()) + " and " +
                         std::to_string(message_symbols.size()));
  }
  std::vector<Symbol> merged;
  merged.reserve(layout.params.B);
  std::size_t ri = 0, mi = 0;
  for (const Position& pos : free_positions(layout.params)) {
    if (ri < layout.R() && layout.random_positions[ri] == pos) {
      merged.push_back(random_symbols[ri++]);
    } else {
      merged.push_back(message_symbols[mi++]);
    }
  }
  return build_message_matrix(layout.params, merged);
}

std::pair<std::vector<Symbol>, std::vector<Symbol>> secure_extract(const SecureLayout& layout,
                                                                   const MessageMatrix& mm) {
  std::vector<Symbol> randoms, message;
  std::size_t ri = 0;
  for (const Position& pos : free_positions(layout.params)) {
    Symbol v = mm.matrix()(pos.row, pos.col);
    if (ri < layout.R() && layout.random_positions[ri] == pos) {
      randoms.push_back(v);
      ++ri;
    } else {
      message.push_back(v);
    }
  }
  return {randoms, message};
}

std::vector<Symbol> eavesdropper_view(const MessageMatrix& mm,
                                      std::span<const std::uint32_t> storage_nodes,
                                      std::span<const std::uint32_t> repair_nodes,
                                      const ViewOptions& options) {
  const CodeParams& p = mm.params();
  std::set<std::uint32_t> storage;
  for (auto node : storage_nodes) {
    p.check_node(node);
    if (!storage.insert(node).second) {
      throw DuplicateNode("storage node " + std::to_string(node) + " listed twice");
    }
  }
  std::set<std::uint32_t> repair;
  for (auto node : repair_nodes) {
    if (!storage.count(node)) {
      throw BudgetError("repair node " + std::to_string(node) + " is not an eavesdropped node");
    }
    if (!repair.insert(node).second) {
      throw DuplicateNode("repair node " + std::to_string(node) + " listed twice");
    }
  }
  if (options.check_budget && (storage.size() > options.l || repair.size() > options.lp)) {
    throw BudgetError("view of " + std::to_string(storage.size()) + " nodes / " +
                      std::to_string(repair.size()) + " repairs exceeds {" +
                      std::to_string(options.l) + ", " + std::to_string(options.lp) + "}");
  }
  if (storage.empty()) return {};

  const std::vector<Share> shares = encode(mm);
  std::vector<Symbol> view;
  for (auto node : storage) {
    if (!repair.count(node)) {
      const auto& data = shares[node - 1].data;
      view.insert(view.end(), data.begin(), data.end());
      continue;
    }
    const std::vector<Symbol> phi = repair_vector(p, node);
    std::vector<std::uint32_t> survivors;
    for (std::uint32_t h = 1; h <= p.n; ++h) {
      if (h != node) survivors.push_back(h);
    }
    for (std::uint32_t t = 0; t < std::max<std::uint32_t>(1, options.repair_instances); ++t) {
      for (std::uint32_t j = 0; j < p.d; ++j) {
        std::uint32_t h = survivors[(t + j) % survivors.size()];
        view.push_back(helper_compute(p, shares[h - 1], phi).value);
      }
    }
  }
  return view;
}

LeakageReport leakage_check(const CodeParams& params, std::uint32_t l, std::uint32_t lp,
                            const LeakageOptions& options) {
  LeakageReport report;
  if (l == 0) {
    if (lp != 0) throw BudgetError("l' must be 0 when l = 0");
    report.configurations = 1;
    report.messages = 1;
    return report;
  }
  const SecureLayout layout = secure_layout(params, l, lp);
  const std::uint32_t q = params.q;
  const std::size_t n_rand = options.pin_random ? 0 : layout.R();
  const std::size_t n_msg = layout.capacity();

  const std::uint64_t total = bounded_pow(q, n_rand + n_msg, options.max_enumeration);
  if (total > options.max_enumeration) {
    throw EnumerationTooLarge("q^" + std::to_string(n_rand + n_msg) + " exceeds " +
                              std::to_string(options.max_enumeration));
  }
  const std::uint64_t messages = bounded_pow(q, n_msg, options.max_enumeration);
  const std::uint64_t randoms = bounded_pow(q, n_rand, options.max_enumeration);
  report.messages = messages;
  report.all_pairs = messages <= 64;
  report.tv_denominator = randoms;

  const Field f = params.field();
  const std::vector<Symbol> zeros_r(layout.R(), 0);
  const std::vector<Symbol> zeros_m(n_msg, 0);
  ViewOptions vopt;
  vopt.check_budget = true;
  vopt.l = l;
  vopt.lp = lp;
  vopt.repair_instances = options.repair_instances;

  std::vector<std::uint32_t> nodes(params.n);
  std::iota(nodes.begin(), nodes.end(), 1);
  std::uint64_t worst = 0;

  for_each_combination(nodes, l, [&](const std::vector<std::uint32_t>& storage) {
    for_each_combination(storage, lp, [&](const std::vector<std::uint32_t>& repair) {
      ++report.configurations;
      // The view is linear in the symbols: tabulate its response to each
      // unit symbol once, then walk every assignment incrementally.
      auto view_of = [&](std::span<const Symbol> r, std::span<const Symbol> m) {
        return eavesdropper_view(secure_build(layout, r, m), storage, repair, vopt);
      };
      std::vector<std::vector<Symbol>> rand_cols, msg_cols;
      for (std::size_t j = 0; j < n_rand; ++j) {
        std::vector<Symbol> e(layout.R(), 0);
        e[j] = 1;
        rand_cols.push_back(view_of(e, zeros_m));
      }
      for (std::size_t j = 0; j < n_msg; ++j) {
        std::vector<Symbol> e(n_msg, 0);
        e[j] = 1;
        msg_cols.push_back(view_of(zeros_r, e));
      }
      const std::size_t len = view_of(zeros_r, zeros_m).size();
      auto add_col = [&](std::vector<Symbol>& acc, const std::vector<Symbol>& col) {
        for (std::size_t i = 0; i < len; ++i) acc[i] = f.add(acc[i], col[i]);
      };

      std::vector<Histogram> kept;
      Histogram reference;
      std::vector<Symbol> msg_digits(n_msg, 0);
      std::vector<Symbol> base(len, 0);
      bool first = true;
      do {
        Histogram h;
        std::vector<Symbol> rand_digits(n_rand, 0);
        std::vector<Symbol> cur = base;
        do {
          ++h[key_of(cur)];
        } while (odometer_next(rand_digits, q, [&](std::size_t i) { add_col(cur, rand_cols[i]); }));

        if (report.all_pairs) {
          for (const auto& other : kept) worst = std::max(worst, tv_excess(h, other));
          kept.push_back(std::move(h));
        } else if (first) {
          reference = std::move(h);
        } else {
          worst = std::max(worst, tv_excess(h, reference));
        }
        first = false;
      } while (odometer_next(msg_digits, q, [&](std::size_t i) { add_col(base, msg_cols[i]); }));
    });
  });

  report.independent = worst == 0;
  const std::uint64_t g = std::gcd(worst, randoms);
  report.tv_numerator = worst / (g ? g : 1);
  report.tv_denominator = randoms / (g ? g : 1);
  return report;
}

Matrix embed_via_secure(const CodeParams& params, std::span<const Symbol> symbols) {
  if (symbols.size() != params.B) {
    throw LengthMismatch("expected " + std::to_string(params.B) + " message symbols, got " +
                         std::to_string(symbols.size()));
  }
  const std::size_t alpha = params.alpha;
  const std::size_t s1_rows = std::min<std::size_t>(params.k, alpha);
  const std::size_t s2_size = params.k - 1;
  Matrix s(params.field(), 2 * alpha, alpha);
  std::size_t next = 0;
  for (std::size_t r = 0; r < s1_rows; ++r) {
    for (std::size_t c = r; c < alpha; ++c) {
      s(r, c) = s(c, r) = symbols[next++];
    }
  }
  for (std::size_t r = 0; r < s2_size; ++r) {
    for (std::size_t c = r; c < s2_size; ++c) {
      s(alpha + r, c) = s(alpha + c, r) = symbols[next++];
    }
  }
  return s;
}

}  // namespace gmsr
