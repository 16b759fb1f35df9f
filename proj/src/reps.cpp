#include "mckay/reps.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mckay {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using ModMat = std::vector<std::vector<u64>>;

// Characteristic polynomial by Faddeev-LeVerrier; coefficients constant term first, monic.
std::vector<u64> charpoly(const ModMat& m, u64 p) {
  const std::size_t k = m.size();
  std::vector<u64> c(k + 1, 0);
  c[k] = 1;
  ModMat mk(k, std::vector<u64>(k, 0));
  for (std::size_t i = 1; i <= k; ++i) {
    ModMat next(k, std::vector<u64>(k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) {
        if (mk[r][s] == 0) continue;
        for (std::size_t t = 0; t < k; ++t) next[r][t] = (next[r][t] + mulmod(mk[r][s], m[s][t], p)) % p;
      }
    }
    // next = M_{i-1} * A; add c_{k-i+1} I to M_{i-1} before multiplying
    for (std::size_t r = 0; r < k; ++r) next[r][r] = next[r][r];
    ModMat mi(k, std::vector<u64>(k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t t = 0; t < k; ++t) mi[r][t] = next[r][t];
      mi[r][r] = (mi[r][r] + c[k - i + 1]) % p;
    }
    ModMat ami(k, std::vector<u64>(k, 0));
    u64 tr = 0;
    for (std::size_t r = 0; r < k; ++r) {
      u64 acc = 0;
      for (std::size_t s = 0; s < k; ++s) acc = (acc + mulmod(m[r][s], mi[s][r], p)) % p;
      tr = (tr + acc) % p;
    }
    c[k - i] = (p - mulmod(tr, invmod(i % p, p), p)) % p;
    mk = mi;
  }
  return c;
}

// Nullspace of a square matrix mod p; returns basis vectors.
std::vector<std::vector<u64>> nullspace_mod(ModMat a, u64 p) {
  const std::size_t n = a.size();
  std::vector<int> piv_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && a[r][col] == 0) ++r;
    if (r == n) continue;
    std::swap(a[row], a[r]);
    u64 inv = invmod(a[row][col], p);
    for (auto& v : a[row]) v = mulmod(v, inv, p);
    for (std::size_t q = 0; q < n; ++q) {
      if (q == row || a[q][col] == 0) continue;
      u64 f = a[q][col];
      for (std::size_t t = 0; t < n; ++t) a[q][t] = (a[q][t] + p - mulmod(f, a[row][t], p)) % p;
    }
    piv_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : piv_col) is_piv[c] = true;
  std::vector<std::vector<u64>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv_col.size(); ++r) v[piv_col[r]] = (p - a[r][f]) % p;
    out.push_back(v);
  }
  return out;
}

}  // namespace

CharacterTable character_table(const FiniteMatrixGroup& g, const CycField& field, std::uint64_t seed) {
  CharacterTable t;
  t.group = &g;
  t.field = &field;
  t.classes = conjugacy_classes(g);
  const std::size_t k = t.classes.size();
  const u64 order = g.order();
  const int n = field.conductor();
  const int e = g.exponent();
  if (n % e != 0) {
    throw std::invalid_argument("conductor " + std::to_string(n) + " is not a multiple of exponent " +
                                std::to_string(e) + " of " + g.name());
  }
  for (const auto& c : t.classes.classes) t.class_sizes.push_back(static_cast<int>(c.size()));
  for (int r : t.classes.reps) t.inverse_class.push_back(t.classes.class_of[g.inverse(r)]);

  u64 p = static_cast<u64>(n) * ((std::max<u64>(2 * order, 1000) / n) + 1) + 1;
  while (!is_prime(p)) p += n;

  // a[j][l][m] = #{(x, y) : x in C_j, y in C_l, x y = rep_m}
  std::vector<std::vector<std::vector<u64>>> a(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  for (std::size_t m = 0; m < k; ++m) {
    const int z = t.classes.reps[m];
    for (std::size_t x = 0; x < order; ++x) {
      const int y = g.mul(g.inverse(static_cast<int>(x)), z);
      ++a[t.classes.class_of[x]][t.classes.class_of[y]][m];
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<u64>> eigvecs;
  for (int attempt = 0; attempt < 64 && eigvecs.size() != k; ++attempt) {
    ModMat comb(k, std::vector<u64>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
      u64 c = rng() % p;
      for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t m = 0; m < k; ++m) comb[l][m] = (comb[l][m] + mulmod(c, a[j][l][m] % p, p)) % p;
      }
    }
    auto cp = charpoly(comb, p);
    std::vector<u64> roots;
    for (u64 lam = 0; lam < p && roots.size() < k; ++lam) {
      u64 v = 0;
      for (std::size_t i = cp.size(); i-- > 0;) v = (mulmod(v, lam, p) + cp[i]) % p;
      if (v == 0) roots.push_back(lam);
    }
    if (roots.size() != k) continue;
    eigvecs.clear();
    for (u64 lam : roots) {
      ModMat shifted = comb;
      for (std::size_t i = 0; i < k; ++i) shifted[i][i] = (shifted[i][i] + p - lam) % p;
      auto ns = nullspace_mod(shifted, p);
      if (ns.size() != 1 || ns[0][0] == 0) {
        eigvecs.clear();
        break;
      }
      std::vector<u64> w = ns[0];
      u64 s = invmod(w[0], p);
      for (auto& v : w) v = mulmod(v, s, p);
      eigvecs.push_back(w);
    }
  }
  if (eigvecs.size() != k) throw std::runtime_error("class-sum eigenvectors did not separate for " + g.name());

  const u64 theta = powmod(primitive_root(p), (p - 1) / n, p);
  std::vector<std::vector<int>> power_classes(k);
  std::vector<int> class_order(k);
  for (std::size_t m = 0; m < k; ++m) {
    const int r = t.classes.reps[m];
    int cur = 0;
    do {
      power_classes[m].push_back(t.classes.class_of[cur]);
      cur = g.mul(cur, r);
    } while (cur != 0);
    class_order[m] = static_cast<int>(power_classes[m].size());
  }

  struct Row {
    int degree;
    ClassFunction chi;
    std::string key;
  };
  std::vector<Row> rows;
  for (const auto& w : eigvecs) {
    u64 s = 0;
    for (std::size_t m = 0; m < k; ++m) {
      s = (s + mulmod(mulmod(w[m], w[t.inverse_class[m]], p), invmod(t.class_sizes[m], p), p)) % p;
    }
    const u64 d2 = mulmod(order % p, invmod(s, p), p);
    u64 d = 0;
    for (u64 c = 1; c * c <= order; ++c) {
      if ((c * c) % p == d2) d = c;
    }
    if (d == 0) throw std::runtime_error("degree recovery failed for " + g.name());
    std::vector<u64> chi_p(k);
    for (std::size_t m = 0; m < k; ++m) chi_p[m] = mulmod(mulmod(d, w[m], p), invmod(t.class_sizes[m], p), p);

    Row row{static_cast<int>(d), {}, ""};
    for (std::size_t m = 0; m < k; ++m) {
      const int o = class_order[m];
      const u64 zo = powmod(theta, n / o, p);
      CycNum val = CycNum::zero(&field);
      for (int sidx = 0; sidx < o; ++sidx) {
        u64 acc = 0;
        for (int l = 0; l < o; ++l) {
          u64 z = powmod(zo, static_cast<u64>((o - (static_cast<long>(sidx) * l) % o) % o), p);
          acc = (acc + mulmod(chi_p[power_classes[m][l]], z, p)) % p;
        }
        const u64 mult = mulmod(acc, invmod(o, p), p);
        if (mult > d) throw std::runtime_error("eigenvalue multiplicity out of range for " + g.name());
        if (mult > 0) val += CycNum(static_cast<long>(mult)) * root_of_unity(field, static_cast<long>(sidx) * (n / o));
      }
      row.chi.values.push_back(val);
      row.key += val.to_string() + ";";
    }
    rows.push_back(std::move(row));
  }
  auto trivial = [](const Row& r) {
    return std::all_of(r.chi.values.begin(), r.chi.values.end(), [](const CycNum& v) { return v.is_one(); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (trivial(x) != trivial(y)) return trivial(x);
    return x.key < y.key;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.chars.push_back(rows[i].chi);
    t.degrees.push_back(rows[i].degree);
    t.names.push_back("chi_" + std::to_string(i + 1));
  }
  if (!rows_orthonormal(t)) throw std::runtime_error("character table of " + g.name() + " failed orthogonality");
  return t;
}

CycNum inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  CycNum s(0);
  for (std::size_t m = 0; m < t.classes.size(); ++m) {
    s += CycNum(t.class_sizes[m]) * a.values[m] * b.values[m].conj();
  }
  return s * CycNum(mpq_class(1, static_cast<long>(t.order())));
}

std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::vector<long> out;
  for (const auto& chi : t.chars) {
    CycNum ip = inner_product(t, f, chi);
    if (!ip.is_rational() || ip.rational_value().get_den() != 1) {
      throw std::runtime_error("non-integral multiplicity " + ip.to_string());
    }
    out.push_back(ip.rational_value().get_num().get_si());
  }
  return out;
}

ClassFunction natural_character(const CharacterTable& t) {
  ClassFunction f;
  for (int r : t.classes.reps) f.values.push_back(t.group->element(r).trace());
  return f;
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction f;
  for (std::size_t i = 0; i < a.values.size(); ++i) f.values.push_back(a.values[i] * b.values[i]);
  return f;
}

bool is_real_valued(const ClassFunction& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](const CycNum& v) { return v == v.conj(); });
}

bool rows_orthonormal(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) {
      CycNum ip = inner_product(t, t.chars[i], t.chars[j]);
      if (ip != CycNum(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const std::size_t k = t.classes.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      CycNum s(0);
      for (const auto& chi : t.chars) s += chi.values[a] * chi.values[b].conj();
      CycNum want = a == b ? CycNum::rational(static_cast<long>(t.order()), t.class_sizes[a]) : CycNum(0);
      if (s != want) return false;
    }
  }
  return true;
}

int epsilon_character(const CharacterTable& gt, const FiniteMatrixGroup& h) {
  ClassFunction eps;
  for (int r : gt.classes.reps) eps.values.push_back(CycNum(h.contains(gt.group->element(r)) ? 1 : -1));
  for (std::size_t i = 0; i < gt.size(); ++i) {
    bool same = true;
    for (std::size_t m = 0; m < eps.values.size(); ++m) {
      if (gt.chars[i].values[m] != eps.values[m]) {
        same = false;
        break;
      }
    }
    if (same) return static_cast<int>(i);
  }
  throw std::runtime_error("the coset sign character is missing from the table of " + gt.group->name());
}

std::vector<int> class_fusion(const CharacterTable& gt, const CharacterTable& ht) {
  std::vector<int> out;
  for (int r : ht.classes.reps) {
    int gi = gt.group->index_of(ht.group->element(r));
    if (gi < 0) throw std::invalid_argument("subgroup element missing from the ambient group");
    out.push_back(gt.classes.class_of[gi]);
  }
  return out;
}

ClassFunction induce(const CharacterTable& gt, const CharacterTable& ht, const ClassFunction& chi) {
  const auto fusion = class_fusion(gt, ht);
  ClassFunction f;
  f.values.assign(gt.classes.size(), CycNum(0));
  for (std::size_t c = 0; c < fusion.size(); ++c) {
    const int kg = fusion[c];
    mpq_class scale(static_cast<long>(gt.order()) * ht.class_sizes[c],
                    static_cast<long>(ht.order()) * gt.class_sizes[kg]);
    scale.canonicalize();
    f.values[kg] += CycNum(scale) * chi.values[c];
  }
  return f;
}

ClassFunction restrict_to(const CharacterTable& gt, const CharacterTable& ht, const ClassFunction& psi) {
  const auto fusion = class_fusion(gt, ht);
  ClassFunction f;
  for (int kg : fusion) f.values.push_back(psi.values[kg]);
  return f;
}

InductionReport verify_induction_pattern(const CharacterTable& gt, const CharacterTable& ht) {
  InductionReport rep;
  const int eps = epsilon_character(gt, *ht.group);
  auto twist = [&](std::size_t i) {
    ClassFunction f = product(gt.chars[eps], gt.chars[i]);
    for (std::size_t j = 0; j < gt.size(); ++j) {
      if (gt.chars[j].values == f.values) return j;
    }
    throw std::runtime_error("eps twist left the character table");
  };
  for (std::size_t i = 0; i < ht.size(); ++i) {
    const auto& chi = ht.chars[i];
    const auto mult = decompose(gt, induce(gt, ht, chi));
    std::vector<std::size_t> parts;
    bool unit = true;
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (mult[j] == 0) continue;
      if (mult[j] != 1) unit = false;
      parts.push_back(j);
    }
    std::string line = ht.names[i] + ": ind = ";
    for (std::size_t q = 0; q < parts.size(); ++q) line += (q ? " + " : "") + gt.names[parts[q]];
    bool ok = unit;
    if (is_real_valued(chi)) {
      ok = ok && parts.size() == 2 && twist(parts[0]) == parts[1];
      if (ok) ok = restrict_to(gt, ht, gt.chars[parts[0]]).values == chi.values;
      line += " (self-contragredient, splits)";
    } else {
      ok = ok && parts.size() == 1 && twist(parts[0]) == parts[0];
      if (ok) {
        const auto res = restrict_to(gt, ht, gt.chars[parts[0]]);
        for (std::size_t m = 0; m < res.values.size() && ok; ++m) {
          ok = res.values[m] == chi.values[m] + chi.values[m].conj();
        }
      }
      line += " (not self-contragredient, irreducible)";
    }
    if (!ok) {
      rep.ok = false;
      line += " FAILED";
    }
    rep.lines.push_back(line);
  }
  return rep;
}

Quiver mckay_quiver(const CharacterTable& t) {
  Quiver q;
  q.names = t.names;
  q.dims = t.degrees;
  const ClassFunction nat = natural_character(t);
  for (std::size_t i = 0; i < t.size(); ++i) q.adjacency.push_back(decompose(t, product(nat, t.chars[i])));
  for (const auto& row : q.adjacency) {
    for (long v : row) {
      if (v < 0) throw std::runtime_error("negative McKay multiplicity");
    }
  }
  return q;
}

}  // namespace mckay
