#include "sparsefac/factorizer.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "sparsefac/unifactor.hpp"

namespace sparsefac {

namespace {

constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();


SparsePoly normalized(const SparsePoly& h) {
  const Elem lc = lex_leading_coefficient(h);
  return h.scaled(h.field().inv(lc));
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
}

/// Merges equal factors (multiplicities add).
void merge_factors(std::vector<Factor>& fs) {
  sort_factors(fs);
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(std::move(f));
    }
  }
  fs = std::move(out);
}

UniPoly anchor_restriction(const SparsePoly& f, std::span<const Elem> anchor) {
  std::vector<std::size_t> vars(f.nvars() - 1);
  std::iota(vars.begin(), vars.end(), std::size_t{1});
  return to_unipoly(evaluate_partial(f, vars, anchor), 0);
}

BiFactorization factor_line(const SparsePoly& f, std::span<const Elem> a, std::span<const Elem> b) {
  return factor_bivariate(BiPoly(f.field(), line_coefficients(f, a, b)));
}

// ---------------------------------------------------------------------------
// Dense tensor-grid interpolation.

/// inv[k][j]: coefficient of x^k in the Lagrange basis polynomial of node j
/// for the nodes a_0..a_d.
std::vector<std::vector<Elem>> inverse_vandermonde(const Field& fld, unsigned d) {
  std::vector<Elem> nodes(d + 1);
  for (unsigned j = 0; j <= d; ++j) nodes[j] = fld.at(j);
  std::vector<std::vector<Elem>> inv(d + 1, std::vector<Elem>(d + 1));
  const UniPoly x = UniPoly::variable(fld);
  for (unsigned j = 0; j <= d; ++j) {
    UniPoly basis = UniPoly::constant(fld, fld.one());
    Elem denom = fld.one();
    for (unsigned i = 0; i <= d; ++i) {
      if (i == j) continue;
      basis = basis * (x - UniPoly::constant(fld, nodes[i]));
      denom = fld.mul(denom, fld.sub(nodes[j], nodes[i]));
    }
    basis = basis.scaled(fld.inv(denom));
    for (unsigned k = 0; k <= d; ++k) inv[k][j] = basis.coeff(k);
  }
  return inv;
}

class GridInterpolator {
 public:
  GridInterpolator(const Field& fld, std::vector<unsigned> degs) : fld_(fld), degs_(std::move(degs)) {
    std::uint64_t total = 1;
    for (unsigned d : degs_) {
      if (static_cast<std::uint64_t>(d) + 1 > fld_.order())
        throw FieldTooSmall(static_cast<std::uint64_t>(d) + 1, "interpolation grid does not fit");
      total *= d + 1;
      if (total > (std::uint64_t{1} << 26)) throw Error("interpolation grid too large");
    }
    size_ = total;
    std::map<unsigned, std::size_t> seen;
    for (unsigned d : degs_) {
      if (!seen.count(d)) {
        seen[d] = inv_.size();
        inv_.push_back(inverse_vandermonde(fld_, d));
      }
      which_.push_back(seen[d]);
    }
  }

  std::size_t size() const { return size_; }
  std::size_t nvars() const { return degs_.size(); }

  /// Grid point of a flat index (variable 0 most significant).
  std::vector<Elem> point(std::size_t index) const {
    std::vector<Elem> pt(degs_.size());
    for (std::size_t l = degs_.size(); l-- > 0;) {
      pt[l] = fld_.at(index % (degs_[l] + 1));
      index /= degs_[l] + 1;
    }
    return pt;
  }

  /// Turns grid values into a polynomial; nullopt when more than cap terms.
  std::optional<SparsePoly> interpolate(std::vector<Elem> values, std::uint64_t cap) const {
    const std::size_t n = degs_.size();
    std::size_t stride = 1;
    std::vector<Elem> line;
    std::vector<Elem> out;
    for (std::size_t l = n; l-- > 0;) {
      const std::size_t len = degs_[l] + 1;
      const auto& inv = inv_[which_[l]];
      line.resize(len);
      out.resize(len);
      const std::size_t block = stride * len;
      for (std::size_t base = 0; base < size_; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
          for (std::size_t j = 0; j < len; ++j) line[j] = values[base + off + j * stride];
          for (std::size_t k = 0; k < len; ++k) {
            Elem acc = fld_.zero();
            for (std::size_t j = 0; j < len; ++j) acc = fld_.add(acc, fld_.mul(inv[k][j], line[j]));
            out[k] = acc;
          }
          for (std::size_t k = 0; k < len; ++k) values[base + off + k * stride] = out[k];
        }
      }
      stride = block;
    }
    std::vector<Term> terms;
    for (std::size_t idx = 0; idx < size_; ++idx) {
      if (values[idx].is_zero()) continue;
      if (terms.size() >= cap) return std::nullopt;
      ExpVec e(n);
      std::size_t rest = idx;
      for (std::size_t l = n; l-- > 0;) {
        e.set(l, static_cast<unsigned>(rest % (degs_[l] + 1)));
        rest /= degs_[l] + 1;
      }
      terms.push_back(Term{e, values[idx]});
    }
    return SparsePoly(fld_, n, std::move(terms));
  }

 private:
  Field fld_;
  std::vector<unsigned> degs_;
  std::size_t size_ = 1;
  std::vector<std::vector<std::vector<Elem>>> inv_;
  std::vector<std::size_t> which_;
};

// ---------------------------------------------------------------------------
// Monic driver.

/// Bivariate factorizations of the line restrictions f(y, (1-t)a + t b) for
/// every point b of the interpolation grid, computed on demand.
class LineCache {
 public:
  LineCache(const SparsePoly& f, std::vector<Elem> anchor, const GridInterpolator& grid, unsigned workers)
      : f_(f), anchor_(std::move(anchor)), grid_(grid), entries_(grid.size()), workers_(workers) {}

  const BiFactorization& at(std::size_t index) {
    if (!entries_[index]) {
      if (workers_ > 1) {
        fill_parallel();
      } else {
        entries_[index] = compute(index);
      }
    }
    return *entries_[index];
  }

  const std::vector<Elem>& anchor() const { return anchor_; }

  /// True when some computed line restriction of f is irreducible.
  bool saw_irreducible_line() const {
    for (const auto& e : entries_)
      if (e && e->factors.size() == 1 && e->factors[0].multiplicity == 1) return true;
    return false;
  }

 private:
  BiFactorization compute(std::size_t index) const {
    const auto b = grid_.point(index);
    return factor_line(f_, anchor_, b);
  }

  void fill_parallel() {
    std::vector<std::optional<BiFactorization>> results(entries_.size());
    std::vector<std::exception_ptr> errors(workers_);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers_; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < entries_.size(); i += workers_)
            if (!entries_[i]) results[i] = compute(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (!entries_[i]) entries_[i] = std::move(results[i]);
  }

  const SparsePoly& f_;
  std::vector<Elem> anchor_;
  const GridInterpolator& grid_;
  std::vector<std::optional<BiFactorization>> entries_;
  unsigned workers_;
};

struct Candidate {
  std::vector<Factor> parts;
  long long phi = 1;
  std::vector<bool> irreducible;
};

Candidate trivial_candidate(const SparsePoly& f) {
  Candidate c;
  c.parts.push_back(Factor{f, 1});
  c.phi = 1;
  c.irreducible = {false};
  return c;
}

bool all_irreducible(const Candidate& c) {
  return std::all_of(c.irreducible.begin(), c.irreducible.end(), [](bool b) { return b; });
}

std::optional<Candidate> try_guess(const SparsePoly& f, const Guess& guess, const GridInterpolator& grid,
                                   LineCache& cache, std::uint64_t cap) {
  const Field& fld = f.field();
  const std::size_t nparts = guess.parts.size();
  std::vector<int> deg(nparts, 0);
  for (std::size_t i = 0; i < nparts; ++i)
    for (std::size_t j : guess.parts[i]) deg[i] += guess.uni_factors[j].degree();

  // values[i][j][b]: coefficient of y^j of h_i(y, b).
  std::vector<std::vector<std::vector<Elem>>> values(nparts);
  for (std::size_t i = 0; i < nparts; ++i)
    values[i].assign(static_cast<std::size_t>(deg[i]), std::vector<Elem>(grid.size()));
  std::vector<bool> irreducible(nparts, false);
  for (std::size_t i = 0; i < nparts; ++i)
    irreducible[i] = guess.parts[i].size() == 1;

  for (std::size_t b = 0; b < grid.size(); ++b) {
    const BiFactorization& line = cache.at(b);
    std::vector<UniPoly> hs;
    try {
      hs = blackbox_assign(line, guess);
    } catch (const GuessInvalid&) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < nparts; ++i)
      for (int j = 0; j < deg[i]; ++j) values[i][j][b] = hs[i].coeff(static_cast<std::size_t>(j));
    // A part whose line restriction is a single irreducible factor is irreducible.
    for (std::size_t i = 0; i < nparts && !irreducible[i]; ++i) {
      unsigned count = 0;
      bool exact = true;
      for (const auto& bf : line.factors) {
        const UniPoly at0 = bf.poly.eval_t(fld.zero());
        for (std::size_t j : guess.parts[i]) {
          if ((at0 % guess.uni_factors[j]).is_zero()) {
            ++count;
            if (bf.multiplicity != guess.exps[i]) exact = false;
            break;
          }
        }
      }
      if (count == 1 && exact) irreducible[i] = true;
    }
  }

  const std::size_t n = f.nvars();
  std::vector<std::size_t> shift(n - 1);
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  Candidate cand;
  for (std::size_t i = 0; i < nparts; ++i) {
    ExpVec top(n);
    top.set(0, static_cast<unsigned>(deg[i]));
    SparsePoly h = SparsePoly::monomial(fld, fld.one(), top);
    for (int j = 0; j < deg[i]; ++j) {
      auto c = grid.interpolate(std::move(values[i][j]), cap);
      if (!c) return std::nullopt;
      if (c->is_zero()) continue;
      ExpVec yj(n);
      yj.set(0, static_cast<unsigned>(j));
      h = h + remap(*c, n, shift) * SparsePoly::monomial(fld, fld.one(), yj);
      if (h.sparsity() > cap) return std::nullopt;
    }
    cand.parts.push_back(Factor{std::move(h), guess.exps[i]});
  }
  Factorization fz{fld.one(), cand.parts};
  if (!verify_factorization(f, fz, cap)) return std::nullopt;
  cand.phi = guess.phi();
  cand.irreducible = std::move(irreducible);
  return cand;
}

/// Extra irreducibility evidence for candidate parts: a part is irreducible
/// once one of its restrictions to a point or a line is.
void certify_parts(Candidate& c, const HittingSet& anchors, std::size_t anchor_index) {
  constexpr std::uint64_t kPointTries = 24;
  constexpr std::uint64_t kLineTries = 6;
  const std::vector<Elem> a = anchors.at(anchor_index);
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (c.irreducible[i]) continue;
    const SparsePoly& h = c.parts[i].poly;
    if (h.degree_in(0) <= 1) {
      c.irreducible[i] = true;
      continue;
    }
    for (std::uint64_t k = 0; k < kPointTries && k < anchors.size() && !c.irreducible[i]; ++k) {
      const auto pt = anchors.at(k);
      if (is_irreducible(anchor_restriction(h, pt))) c.irreducible[i] = true;
    }
    for (std::uint64_t k = 1; k <= kLineTries && k < anchors.size() && !c.irreducible[i]; ++k) {
      const auto b = anchors.at((anchor_index + k * 7919) % anchors.size());
      if (b == a) continue;
      try {
        const auto fz = factor_line(h, a, b);
        if (fz.factors.size() == 1 && fz.factors[0].multiplicity == 1) c.irreducible[i] = true;
      } catch (const FieldTooSmall&) {
        // Inconclusive; other evidence may still certify the part.
      }
    }
  }
}

Factorization monic_result(const Field& fld, std::vector<Factor> parts) {
  sort_factors(parts);
  return Factorization{fld.one(), std::move(parts)};
}

// ---------------------------------------------------------------------------
// General driver.

struct Compressed {
  SparsePoly poly;
  std::vector<std::size_t> present;  // original index of each compressed variable
};

Compressed compress(const SparsePoly& f) {
  Compressed c;
  std::vector<std::size_t> map(f.nvars(), 0);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (f.depends_on(i)) {
      map[i] = c.present.size();
      c.present.push_back(i);
    }
  }
  c.poly = remap(f, c.present.size(), map);
  return c;
}

/// Elimination variable: prefer a variable with constant leading
/// coefficient, then the smallest degree blow-up of the make-monic transform.
std::size_t choose_variable(const SparsePoly& g) {
  const std::size_t m = g.nvars();
  std::size_t best = m - 1;
  std::tuple<int, unsigned, unsigned, std::size_t> best_key{INT_MAX, 0, 0, 0};
  for (std::size_t v = m; v-- > 0;) {
    const LeadInfo li = lead_and_degrees(g, v);
    unsigned est = li.degree;
    for (std::size_t l = 0; l < m; ++l) {
      if (l == v) continue;
      est = std::max(est, g.degree_in(l) + (li.degree - 1) * li.lc.degree_in(l));
    }
    const std::tuple<int, unsigned, unsigned, std::size_t> key{li.lc.is_constant() ? 0 : 1, est, li.degree,
                                                               li.lc.sparsity()};
    if (key < best_key) {
      best_key = key;
      best = v;
    }
  }
  return best;
}

Factorization factor_core(const SparsePoly& f, const FactorConfig& cfg);

Factorization factor_compressed(const SparsePoly& g, const FactorConfig& cfg) {
  const std::size_t m = g.nvars();
  Factorization out{lex_leading_coefficient(g), {}};

  if (m == 1) {
    const auto uf = factor_univariate(to_unipoly(g, 0));
    for (const auto& u : uf.factors) out.factors.push_back(Factor{from_unipoly(u.poly, 1, 0), u.multiplicity});
    return out;
  }
  if (m == 2) {
    const auto bf = factor_bivariate(BiPoly::from_sparse(g));
    for (const auto& b : bf.factors) out.factors.push_back(Factor{b.poly.to_sparse(), b.multiplicity});
    sort_factors(out.factors);
    return out;
  }

  // Move the elimination variable last.
  const std::size_t v = choose_variable(g);
  std::vector<std::size_t> perm(m), back(m);
  for (std::size_t i = 0, j = 0; i < m; ++i) {
    if (i == v) continue;
    perm[i] = j;
    back[j] = i;
    ++j;
  }
  perm[v] = m - 1;
  back[m - 1] = v;
  const SparsePoly gp = remap(g, m, perm);
  const std::size_t last = m - 1;

  const LeadInfo li = lead_and_degrees(gp, last);
  const Factorization lcfz = factor_core(li.lc, cfg);

  const MonicTransform mt = make_monic(gp);
  const Factorization hat = factor_monic(mt.fhat, cfg);

  std::vector<std::size_t> lift_fk(last);
  std::iota(lift_fk.begin(), lift_fk.end(), std::size_t{0});
  const SparsePoly fk = remap(mt.fk, m, lift_fk);
  std::vector<std::size_t> unhat(m);
  unhat[0] = last;
  for (std::size_t i = 1; i < m; ++i) unhat[i] = i - 1;

  std::vector<long long> alpha(lcfz.factors.size(), 0);
  for (std::size_t j = 0; j < lcfz.factors.size(); ++j)
    alpha[j] = -static_cast<long long>(lcfz.factors[j].multiplicity) * (mt.k - 1);

  std::vector<Factor> found;
  for (const auto& part : hat.factors) {
    SparsePoly h = scale_variable(remap(part.poly, m, unhat), last, fk);
    for (std::size_t j = 0; j < lcfz.factors.size(); ++j) {
      const SparsePoly& w = lcfz.factors[j].poly;
      while (true) {
        auto q = sparse_divide(h, w, kNoCap);
        if (!q) break;
        h = std::move(*q);
        alpha[j] += part.multiplicity;
      }
    }
    found.push_back(Factor{std::move(h), part.multiplicity});
  }
  for (std::size_t j = 0; j < lcfz.factors.size(); ++j) {
    if (alpha[j] < 0) throw std::logic_error("factor: negative leading-coefficient exponent");
    if (alpha[j] > 0) found.push_back(Factor{lcfz.factors[j].poly, static_cast<unsigned>(alpha[j])});
  }
  for (auto& fct : found) out.factors.push_back(Factor{normalized(remap(fct.poly, m, back)), fct.multiplicity});
  merge_factors(out.factors);
  return out;
}

Factorization factor_core(const SparsePoly& f, const FactorConfig& cfg) {
  if (f.is_zero()) throw ZeroPolynomial();
  const Compressed c = compress(f);
  if (c.present.empty()) return Factorization{f.leading_term().coeff, {}};
  Factorization inner = factor_compressed(c.poly, cfg);
  Factorization out{inner.unit, {}};
  for (auto& fct : inner.factors) out.factors.push_back(Factor{remap(fct.poly, f.nvars(), c.present), fct.multiplicity});
  sort_factors(out.factors);
  return out;
}

SparsePoly map_coefficients(const SparsePoly& f, const Field& target, const std::function<Elem(Elem)>& fn) {
  std::vector<Term> terms;
  terms.reserve(f.sparsity());
  for (const auto& t : f.terms()) terms.push_back(Term{t.exps, fn(t.coeff)});
  return SparsePoly(target, f.nvars(), std::move(terms));
}

/// Smallest extension degree over the base field giving at least
/// `required` elements, or nullopt when that exceeds the supported size.
std::optional<std::uint32_t> extension_degree(const Field& small, std::uint64_t required) {
  std::uint64_t q = small.order();
  std::uint32_t mult = 1;
  while (q < required) {
    q *= small.order();
    ++mult;
    if (q > Field::kMaxOrder) return std::nullopt;
  }
  if (mult == 1) {
    // The base field already reports enough elements; move up anyway.
    if (q * small.order() > Field::kMaxOrder) return std::nullopt;
    mult = 2;
  }
  return mult;
}

/// Factors over F_{q^mult}, then groups conjugate factors into factors over F_q.
Factorization factor_extended(const SparsePoly& f, const FactorConfig& cfg, std::uint32_t mult) {
  const Field& small = f.field();
  const Field big = Field::make(small.characteristic(), small.degree() * mult);
  const FieldEmbedding emb(small, big);
  const SparsePoly lifted = map_coefficients(f, big, [&](Elem a) { return emb.lift(a); });
  const Factorization bigfz = factor_core(lifted, cfg);

  auto conj = [&](const SparsePoly& h) {
    return map_coefficients(h, big, [&](Elem a) { return emb.relative_frobenius(a); });
  };
  Factorization out{lex_leading_coefficient(f), {}};
  std::vector<bool> used(bigfz.factors.size(), false);
  for (std::size_t i = 0; i < bigfz.factors.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    SparsePoly prod = bigfz.factors[i].poly;
    SparsePoly cur = conj(bigfz.factors[i].poly);
    while (!(cur == bigfz.factors[i].poly)) {
      bool matched = false;
      for (std::size_t j = 0; j < bigfz.factors.size(); ++j) {
        if (!used[j] && bigfz.factors[j].poly == cur) {
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched) throw std::logic_error("factor: conjugate factor missing");
      prod = prod * cur;
      cur = conj(cur);
    }
    const SparsePoly down = map_coefficients(prod, small, [&](Elem a) {
      Elem r;
      if (!emb.descend(a, r)) throw std::logic_error("factor: orbit product outside the base field");
      return r;
    });
    out.factors.push_back(Factor{down, bigfz.factors[i].multiplicity});
  }
  sort_factors(out.factors);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SparsePoly expand(const Field& field, std::size_t nvars, const Factorization& fz) {
  SparsePoly acc = SparsePoly::constant(field, nvars, fz.unit);
  for (const auto& f : fz.factors) acc = acc * f.poly.pow(f.multiplicity);
  return acc;
}

long long Guess::phi() const { return phi_score(exps); }

std::vector<Guess> enumerate_guesses(const SparsePoly& f, std::span<const Elem> anchor) {
  if (f.nvars() == 0 || anchor.size() + 1 != f.nvars()) throw ShapeMismatch("anchor arity mismatch");
  const UniPoly u = anchor_restriction(f, anchor);
  if (!u.is_monic() || u.degree() < 1) throw NotMonic();
  const auto uf = factor_univariate(u);
  const std::size_t K = uf.factors.size();

  Guess base;
  base.anchor.assign(anchor.begin(), anchor.end());
  std::vector<std::size_t> first(K);
  for (std::size_t k = 0; k < K; ++k) {
    first[k] = base.uni_factors.size();
    for (unsigned r = 0; r < uf.factors[k].multiplicity; ++r) base.uni_factors.push_back(uf.factors[k].poly);
  }

  std::vector<Guess> out;
  std::vector<std::size_t> rgs(K, 0);
  auto emit_partition = [&](std::size_t blocks) {
    std::vector<std::vector<std::size_t>> members(blocks);
    for (std::size_t k = 0; k < K; ++k) members[rgs[k]].push_back(k);
    std::vector<std::vector<unsigned>> choices(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      unsigned g = 0;
      for (std::size_t k : members[b]) g = std::gcd(g, uf.factors[k].multiplicity);
      for (unsigned e = 1; e <= g; ++e)
        if (g % e == 0) choices[b].push_back(e);
    }
    std::vector<std::size_t> pick(blocks, 0);
    while (true) {
      Guess gs = base;
      for (std::size_t b = 0; b < blocks; ++b) {
        const unsigned e = choices[b][pick[b]];
        std::vector<std::size_t> idx;
        for (std::size_t k : members[b])
          for (unsigned r = 0; r < uf.factors[k].multiplicity / e; ++r) idx.push_back(first[k] + r);
        gs.parts.push_back(std::move(idx));
        gs.exps.push_back(e);
      }
      out.push_back(std::move(gs));
      std::size_t b = blocks;
      while (b > 0) {
        --b;
        if (++pick[b] < choices[b].size()) break;
        pick[b] = 0;
        if (b == 0) return;
      }
      if (blocks == 0) return;
    }
  };
  // Restricted-growth strings enumerate set partitions of the K factors.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == K) {
      emit_partition(used);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<UniPoly> blackbox_assign(const BiFactorization& line, const Guess& guess) {
  if (guess.parts.size() != guess.exps.size()) throw ShapeMismatch("parts and exponents differ in length");
  if (line.factors.empty()) throw GuessInvalid("line restriction has no factors");
  const Field& fld = line.factors.front().poly.field();
  const std::size_t nparts = guess.parts.size();
  std::vector<BiPoly> acc(nparts, BiPoly::from_t(UniPoly::constant(fld, fld.one())));
  for (const auto& bf : line.factors) {
    const UniPoly at0 = bf.poly.eval_t(fld.zero());
    std::size_t owner = nparts;
    for (std::size_t i = 0; i < nparts; ++i) {
      const bool hit = std::any_of(guess.parts[i].begin(), guess.parts[i].end(), [&](std::size_t j) {
        return (at0 % guess.uni_factors.at(j)).is_zero();
      });
      if (!hit) continue;
      if (owner != nparts) throw GuessInvalid("line factor matches more than one part");
      owner = i;
    }
    if (owner == nparts) throw GuessInvalid("line factor matches no part");
    if (bf.multiplicity % guess.exps[owner] != 0) throw GuessInvalid("multiplicity not divisible by exponent");
    for (unsigned r = 0; r < bf.multiplicity / guess.exps[owner]; ++r) acc[owner] = acc[owner] * bf.poly;
  }
  std::vector<UniPoly> out;
  out.reserve(nparts);
  for (std::size_t i = 0; i < nparts; ++i) {
    UniPoly expected = UniPoly::constant(fld, fld.one());
    for (std::size_t j : guess.parts[i]) expected = expected * guess.uni_factors.at(j);
    if (acc[i].deg_y() != expected.degree() || !(acc[i].eval_t(fld.zero()) == expected))
      throw GuessInvalid("accumulated part inconsistent with the anchor factors");
    out.push_back(acc[i].eval_t(fld.one()));
  }
  return out;
}

std::vector<UniPoly> blackbox_eval(const SparsePoly& f, const Guess& guess, std::span<const Elem> b) {
  if (b.size() + 1 != f.nvars() || guess.anchor.size() + 1 != f.nvars())
    throw ShapeMismatch("point arity mismatch");
  return blackbox_assign(factor_line(f, guess.anchor, b), guess);
}

std::optional<SparsePoly> reconstruct_sparse(const PointOracle& oracle, const Field& field,
                                             std::span<const unsigned> degs, std::uint64_t cap) {
  const GridInterpolator grid(field, std::vector<unsigned>(degs.begin(), degs.end()));
  std::vector<Elem> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = oracle(grid.point(i));
  return grid.interpolate(std::move(values), cap);
}

std::optional<SparsePoly> reconstruct_sparse(const PointOracle& oracle, const Field& field, std::size_t n,
                                             unsigned d, std::uint64_t cap) {
  const std::vector<unsigned> degs(n, d);
  return reconstruct_sparse(oracle, field, degs, cap);
}

bool verify_factorization(const SparsePoly& f, const Factorization& candidate, std::uint64_t cap) {
  const Field& fld = f.field();
  const std::uint64_t limit = cap > (std::uint64_t{1} << 31) ? std::numeric_limits<std::uint64_t>::max() : cap * cap;
  SparsePoly acc = SparsePoly::constant(fld, f.nvars(), candidate.unit);
  for (const auto& fct : candidate.factors) {
    if (fct.poly.nvars() != f.nvars()) return false;
    for (unsigned r = 0; r < fct.multiplicity; ++r) {
      acc = acc * fct.poly;
      if (acc.sparsity() > limit) return false;
    }
  }
  return acc == f;
}

Factorization factor_monic(const SparsePoly& f, const FactorConfig& cfg) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.nvars() == 0) throw ShapeMismatch("factor_monic needs the variable y");
  const Field& fld = f.field();
  const LeadInfo li = lead_and_degrees(f, 0);
  if (!li.lc.is_one()) throw NotMonic();
  const unsigned dy = li.degree;
  if (dy == 0) return Factorization{fld.one(), {}};

  const std::size_t n = f.nvars() - 1;
  unsigned dx = 0;
  std::vector<unsigned> degs(n);
  for (std::size_t l = 0; l < n; ++l) {
    degs[l] = f.degree_in(l + 1);
    dx = std::max(dx, degs[l]);
  }
  if (dx == 0) {
    const auto uf = factor_univariate(to_unipoly(f, 0));
    std::vector<Factor> parts;
    for (const auto& u : uf.factors) parts.push_back(Factor{from_unipoly(u.poly, f.nvars(), 0), u.multiplicity});
    return monic_result(fld, std::move(parts));
  }
  if (dy == 1) return monic_result(fld, {Factor{f, 1}});

  const HittingSet anchors = cfg.anchors.policy == AnchorPolicy::wide
                                 ? gen_anchor_set(fld, n, f.sparsity(), f.individual_degree(), cfg.anchors)
                                 : gen_anchor_set_degrees(fld, n, dy, dx);
  const GridInterpolator grid(fld, degs);
  const std::uint64_t cap = sparsity_cap(f.nvars(), f.sparsity(), f.individual_degree(), cfg.sb);
  const unsigned workers = std::max(1u, cfg.parallel);

  Candidate best = trivial_candidate(f);
  long long bound = LLONG_MAX;
  for (std::uint64_t idx = 0; idx < anchors.size(); ++idx) {
    const std::vector<Elem> a = anchors.at(idx);
    auto guesses = enumerate_guesses(f, a);
    std::stable_sort(guesses.begin(), guesses.end(),
                     [](const Guess& x, const Guess& y) { return x.phi() > y.phi(); });
    bound = std::min(bound, guesses.front().phi());
    if (best.phi >= bound) break;

    LineCache cache(f, a, grid, workers);
    for (const auto& g : guesses) {
      if (g.phi() <= best.phi) break;
      if (auto cand = try_guess(f, g, grid, cache, cap)) {
        best = std::move(*cand);
        break;
      }
    }
    if (best.phi >= bound) break;
    if (best.parts.size() == 1 && best.parts[0].multiplicity == 1 && cache.saw_irreducible_line()) break;
    certify_parts(best, anchors, idx);
    if (all_irreducible(best)) break;
  }
  return monic_result(fld, std::move(best.parts));
}

Factorization factor(const SparsePoly& f, const FactorConfig& cfg) {
  if (f.is_zero()) throw ZeroPolynomial();
  Factorization result;
  try {
    result = factor_core(f, cfg);
  } catch (const FieldTooSmall& e) {
    if (!cfg.auto_extend) throw;
    std::uint64_t required = e.required();
    while (true) {
      const auto mult = extension_degree(f.field(), required);
      if (!mult) throw FieldTooSmall(required, "required extension field is not supported");
      try {
        result = factor_extended(f, cfg, *mult);
        break;
      } catch (const FieldTooSmall& again) {
        std::uint64_t tried = 1;
        for (std::uint32_t i = 0; i < *mult; ++i) tried *= f.field().order();
        required = std::max<std::uint64_t>(again.required(), tried + 1);
      }
    }
  }
  if (!(expand(f.field(), f.nvars(), result) == f))
    throw NoFactorizationFound("factorization does not multiply back to the input");
  return result;
}

}  // namespace sparsefac
