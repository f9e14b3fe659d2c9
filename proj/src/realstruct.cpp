#include "realstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl2real {

StructureValidity validate_structure(SigmaKind sigma, const FiniteSubgroup& H,
                                     const Mat2& t) {
  StructureValidity v;
  if (t.det() != CycNum(1)) {
    v.failed_condition = 1;
    v.reason = "twist has determinant != 1";
    return v;
  }
  Mat2 ti = t.inverse();
  for (const auto& h : H.elements()) {
    if (!H.contains(ti * apply_sigma(sigma, h) * t)) {
      v.failed_condition = 1;
      v.reason = "sigma(H) != t H t^-1";
      return v;
    }
  }
  if (!H.contains(apply_sigma(sigma, t) * t)) {
    v.failed_condition = 2;
    v.reason = "sigma(t) t not in H";
    return v;
  }
  v.ok = true;
  return v;
}

namespace {

// sigma(n)^{-1} t1 n in t2 H
bool is_equiv_witness(SigmaKind sigma, const FiniteSubgroup& H, const Mat2& t1,
                      const Mat2& t2, const Mat2& n) {
  return H.coset_equal(t2, apply_sigma(sigma, n).inverse() * t1 * n);
}

Mat2 diag_of(const CycNum& c) {
  return Mat2(c, CycNum(0), CycNum(0), c.inverse());
}

Mat2 antidiag_of(const CycNum& c) {
  return Mat2(CycNum(0), c, -c.inverse(), CycNum(0));
}

}  // namespace

EquivalenceResult structures_equivalent(SigmaKind sigma,
                                        const FiniteSubgroup& H,
                                        const Mat2& t1, const Mat2& t2) {
  NormalizerQuotient q = normalizer_quotient(H);
  if (q.kind == QuotientKind::Finite) {
    for (const auto& n : q.representatives) {
      if (is_equiv_witness(sigma, H, t1, t2, n))
        return {EquivOutcome::Equivalent, n};
    }
    return {EquivOutcome::Inequivalent, std::nullopt};
  }

  // Infinite normalizer (A_n): bounded search over monomial matrices
  // diag(c, c^-1) and [[0, c], [-c^-1, 0]] with c = (p/q) zeta, the
  // rational of height <= 16 and the root of unity of order <= 8n.
  // Exhausting the bounds is reported as undecided, never inequivalent.
  const unsigned max_order = 8 * std::max(1u, H.label().n);
  const long max_height = 16;
  for (unsigned o = 1; o <= max_order; ++o) {
    CycNum z = CycNum::zeta(o);
    std::vector<unsigned> exps;
    if (o == 1)
      exps.push_back(0);
    else
      for (unsigned k = 1; k < o; ++k)
        if (std::gcd(k, o) == 1) exps.push_back(k);
    for (unsigned k : exps) {
      CycNum root = z.pow(k);
      for (long h = 1; h <= max_height; ++h) {
        for (bool anti : {false, true}) {
          for (long p = 1; p <= h; ++p) {
            for (long qd = 1; qd <= h; ++qd) {
              if (std::max(p, qd) != h || std::gcd(p, qd) != 1) continue;
              CycNum c = CycNum(Rational(p, qd)) * root;
              Mat2 n = anti ? antidiag_of(c) : diag_of(c);
              if (is_equiv_witness(sigma, H, t1, t2, n))
                return {EquivOutcome::Equivalent, n};
            }
          }
        }
      }
    }
  }
  return {EquivOutcome::Undecided, std::nullopt};
}

namespace {

std::string matrix_token_or_text(const FiniteSubgroup& H, const Mat2& m);
std::optional<std::pair<std::string, Mat2>> find_named_in_class(
    const FiniteSubgroup& H, const std::vector<Mat2>& members);

std::vector<CohomologyClass> hardcoded_whole_group(SigmaKind sigma,
                                                   const FiniteSubgroup& H) {
  std::vector<Mat2> reps;
  if (H.label().n == 1) {
    reps = sigma == SigmaKind::Split
               ? std::vector<Mat2>{mat_identity()}
               : std::vector<Mat2>{mat_identity(), mat_minus_identity()};
  } else {
    reps = {mat_identity(), mat_e()};
  }
  std::vector<CohomologyClass> out;
  for (const auto& r : reps) {
    StructureValidity v = validate_structure(sigma, H, r);
    if (!v.ok)
      throw std::logic_error("classified representative fails validation");
    out.push_back({r, "[" + matrix_token_or_text(H, r) + "]"});
  }
  return out;
}

}  // namespace

std::vector<CohomologyClass> h1_enumerate(SigmaKind sigma,
                                          const FiniteSubgroup& H) {
  NormalizerQuotient q = normalizer_quotient(H);
  if (q.kind == QuotientKind::DihedralInfinity)
    throw std::invalid_argument(
        "h1_enumerate: infinite dihedral quotient; use h1_table");
  if (q.kind == QuotientKind::WholeGroup)
    return hardcoded_whole_group(sigma, H);

  // Cocycles among the coset representatives.
  std::vector<Mat2> cocycles;
  for (const auto& a : q.representatives)
    if (H.contains(apply_sigma(sigma, a) * a)) cocycles.push_back(a);

  // Partition by a ~ b^{-1} a sigma(b), b over the quotient.
  auto coset_index = [&](const Mat2& m) -> size_t {
    for (size_t i = 0; i < cocycles.size(); ++i)
      if (H.coset_equal(cocycles[i], m)) return i;
    throw std::logic_error("coboundary image is not a cocycle coset");
  };
  std::vector<size_t> cls(cocycles.size());
  std::iota(cls.begin(), cls.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t i) {
    return cls[i] == i ? i : cls[i] = find(cls[i]);
  };
  for (size_t i = 0; i < cocycles.size(); ++i) {
    for (const auto& b : q.representatives) {
      Mat2 image = b.inverse() * cocycles[i] * apply_sigma(sigma, b);
      size_t j = coset_index(image);
      cls[find(i)] = find(j);
    }
  }
  std::map<size_t, std::vector<Mat2>> groups;
  for (size_t i = 0; i < cocycles.size(); ++i)
    groups[find(i)].push_back(cocycles[i]);

  std::vector<CohomologyClass> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    Mat2 rep = members.front();
    std::string label = matrix_token_or_text(H, rep);
    if (auto named = find_named_in_class(H, members)) {
      label = named->first;
      rep = named->second;
    }
    out.push_back({rep, "[" + label + "]"});
  }
  std::sort(out.begin(), out.end(),
            [](const CohomologyClass& a, const CohomologyClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

std::vector<CohomologyClass> h1_table(SigmaKind sigma,
                                      const FiniteSubgroup& H) {
  const GroupLabel& l = H.label();
  if (!(l.family == 'A' && l.n >= 3)) return h1_enumerate(sigma, H);

  unsigned n = l.n;
  std::string o2n = "omega" + std::to_string(2 * n);
  std::vector<std::pair<std::string, Mat2>> named;
  if (sigma == SigmaKind::Split) {
    if (n % 2 == 1)
      named = {{"I2", mat_identity()},
               {"f", mat_f()},
               {"f*" + o2n, mat_f() * mat_omega(2 * n)}};
    else
      named = {{"I2", mat_identity()},
               {"e", mat_e()},
               {"e*" + o2n, mat_e() * mat_omega(2 * n)}};
  } else {
    if (n % 2 == 1)
      named = {{"I2", mat_identity()}, {"-I2", mat_minus_identity()}};
    else
      named = {{"I2", mat_identity()},
               {"e", mat_e()},
               {o2n, mat_omega(2 * n)}};
  }
  std::vector<Mat2> reps;
  for (const auto& [name, m] : named) reps.push_back(m);
  // Published representatives: verify the cocycle condition, pairwise
  // coset distinctness, and the diagonal/antidiagonal shape obstruction.
  for (const auto& r : reps) {
    StructureValidity v = validate_structure(sigma, H, r);
    if (!v.ok) throw std::logic_error("table representative fails validation");
  }
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i + 1; j < reps.size(); ++j) {
      if (H.coset_equal(reps[i], reps[j]))
        throw std::logic_error("table representatives share a coset");
    }
  }
  bool has_diag = false, has_anti = false;
  for (const auto& r : reps) {
    if (r.is_diagonal()) has_diag = true;
    if (r.is_antidiagonal()) has_anti = true;
  }
  if (!has_diag && has_anti)
    throw std::logic_error("unexpected representative shapes");

  std::vector<CohomologyClass> out;
  for (const auto& [name, m] : named) out.push_back({m, "[" + name + "]"});
  return out;
}

bool sigma_c_locus_nonempty(const FiniteSubgroup& H, const Mat2& t) {
  return H.contains(t);
}

namespace {

std::vector<std::pair<std::string, Mat2>> named_candidates(unsigned n_hint) {
  std::vector<std::pair<std::string, Mat2>> c = {
      {"I2", mat_identity()},   {"-I2", mat_minus_identity()},
      {"e", mat_e()},           {"-e", -mat_e()},
      {"f", mat_f()},           {"-f", -mat_f()},
  };
  std::vector<unsigned> orders = {4, 8, 16};
  if (n_hint >= 2) orders.push_back(2 * n_hint);
  if (n_hint >= 4) {
    orders.push_back(4 * n_hint - 8);
    orders.push_back(8 * n_hint - 16);
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (unsigned m : orders) {
    if (m < 3) continue;
    std::ostringstream om;
    om << "omega" << m;
    c.push_back({om.str(), mat_omega(m)});
  }
  for (unsigned m : orders) {
    if (m < 3) continue;
    std::ostringstream om;
    om << "omega" << m;
    Mat2 w = mat_omega(m);
    c.push_back({"e*" + om.str(), mat_e() * w});
    c.push_back({"f*" + om.str(), mat_f() * w});
    c.push_back({"-f*" + om.str(), -(mat_f() * w)});
  }
  c.push_back({"e*f", mat_e() * mat_f()});
  c.push_back({"d", mat_d()});
  c.push_back({"alpha", mat_alpha()});
  return c;
}

std::string matrix_token_or_text(const FiniteSubgroup& H, const Mat2& m) {
  for (const auto& [name, cand] : named_candidates(H.label().n)) {
    if (cand.det() != CycNum(1)) continue;
    if (H.coset_equal(cand, m)) return name;
  }
  return m.str();
}

// Best display name across all members of one cohomology class; prefers
// the earliest named candidate and returns its matrix as representative.
std::optional<std::pair<std::string, Mat2>> find_named_in_class(
    const FiniteSubgroup& H, const std::vector<Mat2>& members) {
  for (const auto& [name, cand] : named_candidates(H.label().n)) {
    if (cand.det() != CycNum(1)) continue;
    for (const auto& m : members)
      if (H.coset_equal(cand, m)) return std::make_pair(name, cand);
  }
  return std::nullopt;
}

}  // namespace

Mat2 parse_matrix_token(const std::string& token) {
  std::string s = token;
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty matrix token");
  Mat2 acc = mat_identity();
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string part =
        star == std::string::npos ? s.substr(pos) : s.substr(pos, star - pos);
    pos = star == std::string::npos ? s.size() : star + 1;
    Mat2 factor;
    if (part == "I2") {
      factor = mat_identity();
    } else if (part == "e") {
      factor = mat_e();
    } else if (part == "f") {
      factor = mat_f();
    } else if (part == "d") {
      factor = mat_d();
    } else if (part == "alpha") {
      factor = mat_alpha();
    } else if (part == "beta") {
      factor = mat_beta();
    } else if (part.rfind("omega", 0) == 0 && part.size() > 5) {
      unsigned long m = 0;
      try {
        m = std::stoul(part.substr(5));
      } catch (...) {
        throw std::invalid_argument("bad matrix token '" + part + "'");
      }
      if (m == 0 || m > 1000)
        throw std::invalid_argument("omega order out of range in '" + part + "'");
      factor = mat_omega(static_cast<unsigned>(m));
    } else {
      throw std::invalid_argument("unknown matrix token '" + part + "'");
    }
    acc = acc * factor;
  }
  return neg ? -acc : acc;
}

}  // namespace sl2real
