#include "mobi/instances/finite.hpp"

#include <map>
#include <string>

namespace mobi {

namespace {

int mod(long v, int n) {
  long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_odd(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": modulus must be positive");
  if (n % 2 == 0) throw ConstructionError(std::string(what) + ": 2 is not invertible mod " + std::to_string(n));
}

EndoMap scaling(int n, int e, int k) {
  EndoMap m;
  m.table.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) m.table[static_cast<std::size_t>(x)] = mod(e + static_cast<long>(k) * (x - e), n);
  return m;
}

}  // namespace

Ring<ModInt> modular_ring(int n) {
  if (n < 2) throw DomainError("Z_n needs n >= 2");
  Ring<ModInt> r;
  r.name = "Z" + std::to_string(n);
  std::vector<ModInt> all;
  for (int v = 0; v < n; ++v) all.emplace_back(v, n);
  r.carrier = finite_carrier(r.name, all);
  r.zero = ModInt(0, n);
  r.one = ModInt(1, n);
  if (n % 2 == 1) r.half = ModInt(2, n).inverse();
  r.add = [](const ModInt& a, const ModInt& b) { return a + b; };
  r.mul = [](const ModInt& a, const ModInt& b) { return a * b; };
  r.neg = [](const ModInt& a) { return -a; };
  r.eq = Equality<ModInt>::exact();
  return r;
}

MobiAlgebra<EndoMap> endo_algebra(int n) {
  require_odd(n, "endo algebra");
  std::vector<EndoMap> members;
  for (int k = 0; k < n; ++k) {
    EndoMap m = scaling(n, 0, k);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (m(mod(x + y, n)) != mod(m(x) + m(y), n))
          throw ConstructionError("endo algebra: multiplication map is not additive");
    members.push_back(std::move(m));
  }
  MobiAlgebra<EndoMap> alg;
  alg.name = "endo:Z" + std::to_string(n);
  alg.carrier = finite_carrier("End(Z" + std::to_string(n) + ")", members);
  alg.p = [n](const EndoMap& f, const EndoMap& g, const EndoMap& h) {
    EndoMap out;
    out.table.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) out.table[static_cast<std::size_t>(x)] = mod(f(x) - g(f(x)) + g(h(x)), n);
    return out;
  };
  const int inv2 = static_cast<int>(ModInt(2, n).inverse().value());
  alg.zero = scaling(n, 0, 0);
  alg.half = scaling(n, 0, inv2);
  alg.one = scaling(n, 0, 1);
  alg.two = scaling(n, 0, 2 % n);
  alg.eq = Equality<EndoMap>::exact();
  return alg;
}

MidpointZn::MidpointZn(int n_, int e_) : n(n_), e(e_), inv2(0) {
  require_odd(n, "midpoint algebra");
  if (e < 0 || e >= n) throw DomainError("base point outside Z_n");
  inv2 = static_cast<int>(ModInt(2, n).inverse().value());
}

int MidpointZn::mid(int x, int y) const { return mod(static_cast<long>(x + y) * inv2, n); }

int MidpointZn::solve_from_base(int w) const {
  for (int z = 0; z < n; ++z)
    if (mid(e, z) == w) return z;
  throw DomainError("no solution of e (+) z = w");
}

MidpointEndoConditions midpoint_endo_conditions(const MidpointZn& X, const EndoMap& g) {
  const int n = X.n;
  MidpointEndoConditions c;
  c.preserves_midpoint = true;
  for (int x = 0; x < n && c.preserves_midpoint; ++x)
    for (int y = 0; y < n; ++y)
      if (g(X.mid(x, y)) != X.mid(g(x), g(y))) {
        c.preserves_midpoint = false;
        break;
      }
  c.fixes_base = g(X.e) == X.e;

  // gbar(x) is any b with b (+) g(x) = e (+) x.
  c.has_complement = true;
  c.complement.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      if (X.mid(b, g(x)) == X.mid(X.e, x)) {
        c.complement[static_cast<std::size_t>(x)] = b;
        found = true;
      }
    if (!found) {
      c.has_complement = false;
      break;
    }
  }
  if (!c.has_complement) {
    c.complement.clear();
    return c;
  }

  c.has_tilde = true;
  c.tilde.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n && c.has_tilde; ++x)
    for (int y = 0; y < n; ++y) {
      const int target = X.mid(c.complement[static_cast<std::size_t>(x)], g(y));
      bool found = false;
      for (int z = 0; z < n && !found; ++z)
        if (X.mid(X.e, z) == target) {
          c.tilde[static_cast<std::size_t>(x * n + y)] = z;
          found = true;
        }
      if (!found) {
        c.has_tilde = false;
        break;
      }
    }
  if (!c.has_tilde) c.tilde.clear();
  return c;
}

std::vector<EndoMap> midpoint_endo_members(const MidpointZn& X) {
  const int n = X.n;
  std::vector<EndoMap> members;
  if (n <= 5) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      EndoMap m{digits};
      if (midpoint_endo_conditions(X, m).all()) members.push_back(m);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  } else {
    for (int k = 0; k < n; ++k) {
      EndoMap m = scaling(n, X.e, k);
      if (!midpoint_endo_conditions(X, m).all())
        throw ConstructionError("midpoint endo algebra: scaling map fails the membership conditions");
      members.push_back(std::move(m));
    }
  }
  return members;
}

MobiAlgebra<EndoMap> midpoint_endo_algebra(int n, int e) {
  const MidpointZn X(n, e);
  const auto members = midpoint_endo_members(X);
  auto tildes = std::make_shared<std::map<EndoMap, std::vector<int>>>();
  for (const auto& m : members) (*tildes)[m] = midpoint_endo_conditions(X, m).tilde;

  MobiAlgebra<EndoMap> alg;
  alg.name = "midpoint-endo:Z" + std::to_string(n);
  alg.carrier = finite_carrier("End_e(Z" + std::to_string(n) + ")", members);
  alg.p = [X, tildes](const EndoMap& f, const EndoMap& g, const EndoMap& h) {
    auto it = tildes->find(g);
    if (it == tildes->end()) throw DomainError("midpoint endo algebra: middle argument outside carrier");
    const auto& tilde = it->second;
    EndoMap out;
    out.table.resize(static_cast<std::size_t>(X.n));
    for (int x = 0; x < X.n; ++x)
      out.table[static_cast<std::size_t>(x)] = tilde[static_cast<std::size_t>(f(x) * X.n + h(x))];
    return out;
  };
  alg.zero = scaling(n, e, 0);
  EndoMap half;
  EndoMap one;
  for (int x = 0; x < n; ++x) {
    half.table.push_back(X.mid(e, x));
    one.table.push_back(x);
  }
  alg.half = half;
  alg.one = one;
  alg.eq = Equality<EndoMap>::exact();
  return alg;
}

}  // namespace mobi
