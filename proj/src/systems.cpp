#include "gtz/systems.hpp"

#include <algorithm>
#include <cassert>

#include "gtz/errors.hpp"

namespace gtz {

namespace {

void check_entries(const HighestWeight& w) {
  if (w.n < 2) {
    throw InvalidWeight("rank must be at least 2, got n = " + std::to_string(w.n));
  }
  if (static_cast<int>(w.entries2.size()) != w.n) {
    throw InvalidWeight("weight must have n = " + std::to_string(w.n) + " entries");
  }
  for (int i = 0; i + 1 < w.n; ++i) {
    if (w.entries2[i] < w.entries2[i + 1]) {
      throw InvalidWeight("weight entries must weakly decrease: " + w.str());
    }
  }
  if (w.entries2.back() < 0) {
    throw InvalidWeight("weight entries must be nonnegative: " + w.str());
  }
  const int parity = ((w.entries2[0] % 2) + 2) % 2;
  for (int e : w.entries2) {
    if (((e % 2) + 2) % 2 != parity) {
      throw InvalidWeight("weight entries must share one parity: " + w.str());
    }
  }
  if (w.algebra == Algebra::GL && parity != 0) {
    throw InvalidWeight("gl weights must be integer: " + w.str());
  }
}

}  // namespace

HighestWeight HighestWeight::b(std::vector<int> doubled_entries) {
  HighestWeight w;
  w.algebra = Algebra::B;
  w.n = static_cast<int>(doubled_entries.size());
  w.entries2 = std::move(doubled_entries);
  w.validate();
  return w;
}

HighestWeight HighestWeight::gl(std::vector<int> doubled_entries) {
  HighestWeight w;
  w.algebra = Algebra::GL;
  w.n = static_cast<int>(doubled_entries.size());
  w.entries2 = std::move(doubled_entries);
  w.validate();
  return w;
}

void HighestWeight::validate() const { check_entries(*this); }

std::string HighestWeight::str() const { return format_weight_entries2(entries2); }

std::vector<int> parse_weight_entries2(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) throw InvalidWeight("empty weight entry in \"" + text + "\"");
    std::size_t slash = token.find('/');
    try {
      if (slash == std::string::npos) {
        out.push_back(2 * std::stoi(token));
      } else {
        if (token.substr(slash + 1) != "2") {
          throw InvalidWeight("weight entries must be integers or halves: \"" + token + "\"");
        }
        out.push_back(std::stoi(token.substr(0, slash)));
      }
    } catch (const InvalidWeight&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidWeight("cannot parse weight entry \"" + token + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_weight_entries2(const std::vector<int>& entries2) {
  std::string s;
  for (std::size_t i = 0; i < entries2.size(); ++i) {
    if (i) s += ",";
    if (entries2[i] % 2 == 0) {
      s += std::to_string(entries2[i] / 2);
    } else {
      s += std::to_string(entries2[i]) + "/2";
    }
  }
  return s;
}

std::vector<int> exponents_r(const HighestWeight& w) {
  w.validate();
  std::vector<int> r(static_cast<std::size_t>(w.n));
  for (int i = 0; i + 1 < w.n; ++i) {
    r[static_cast<std::size_t>(i)] = (w.entries2[static_cast<std::size_t>(i)] -
                                      w.entries2[static_cast<std::size_t>(i + 1)]) /
                                     2;
  }
  const int last2 = w.entries2.back();
  r[static_cast<std::size_t>(w.n - 1)] = w.algebra == Algebra::B ? last2 : last2 / 2;
  return r;
}

namespace {

std::vector<VarId> problem_variables(Algebra algebra, int n) {
  std::vector<VarId> vars;
  for (int k = n; k >= 2; --k) {
    vars.push_back(VarId::z(-k, -1));
    vars.push_back(VarId::z(-k, 1));
  }
  vars.push_back(algebra == Algebra::B ? VarId::z(0, 1) : VarId::z(-1, 1));
  std::sort(vars.begin(), vars.end());
  return vars;
}

// The lowering operators shared by both problems: for k = n..3,
// L_{-k,-k+1} = z[-k+1,-1] d/dz[-k,-1] + z[-k+1,1] d/dz[-k,1].
DerivationOp ladder_op(int k) {
  DerivationOp op;
  op.name = "L[" + std::to_string(-k) + "," + std::to_string(-k + 1) + "]";
  op.terms.push_back({Poly::variable(VarId::z(-k + 1, -1)), VarId::z(-k, -1)});
  op.terms.push_back({Poly::variable(VarId::z(-k + 1, 1)), VarId::z(-k, 1)});
  return op;
}

}  // namespace

IndicatorSystem build_indicator_b(const HighestWeight& w, int sign_choice) {
  w.validate();
  if (w.algebra != Algebra::B) throw InvalidWeight("expected a B weight: " + w.str());
  assert(sign_choice == 1 || sign_choice == -1);
  IndicatorSystem sys;
  sys.algebra = Algebra::B;
  sys.n = w.n;
  sys.weight = w;
  sys.sign_choice = sign_choice;
  sys.variables = problem_variables(Algebra::B, w.n);

  const std::vector<int> r = exponents_r(w);
  for (int k = w.n; k >= 3; --k) {
    sys.equations.push_back({ladder_op(k), r[static_cast<std::size_t>(w.n - k)] + 1});
  }
  {
    // L[-2,-1] = d/dz[-2,-1] +- (1/2) z[0,1]^2 d/dz[-2,1]
    DerivationOp op;
    op.name = "L[-2,-1]";
    op.terms.push_back({Poly::constant(1), VarId::z(-2, -1)});
    op.terms.push_back(
        {Poly::variable(VarId::z(0, 1), 2) * Rational(sign_choice, 2), VarId::z(-2, 1)});
    sys.equations.push_back({std::move(op), r[static_cast<std::size_t>(w.n - 2)] + 1});
  }
  {
    // L[-1,0] = d/dz[0,1]
    DerivationOp op;
    op.name = "L[-1,0]";
    op.terms.push_back({Poly::constant(1), VarId::z(0, 1)});
    sys.equations.push_back({std::move(op), r[static_cast<std::size_t>(w.n - 1)] + 1});
  }
  return sys;
}

IndicatorSystem build_indicator_gl(const HighestWeight& w) {
  w.validate();
  if (w.algebra != Algebra::GL) throw InvalidWeight("expected a gl weight: " + w.str());
  IndicatorSystem sys;
  sys.algebra = Algebra::GL;
  sys.n = w.n;
  sys.weight = w;
  sys.variables = problem_variables(Algebra::GL, w.n);

  const std::vector<int> r = exponents_r(w);
  for (int k = w.n; k >= 3; --k) {
    sys.equations.push_back({ladder_op(k), r[static_cast<std::size_t>(w.n - k)] + 1});
  }
  {
    // L[-2,-1] = d/dz[-2,-1] + z[-1,1] d/dz[-2,1]
    DerivationOp op;
    op.name = "L[-2,-1]";
    op.terms.push_back({Poly::constant(1), VarId::z(-2, -1)});
    op.terms.push_back({Poly::variable(VarId::z(-1, 1)), VarId::z(-2, 1)});
    sys.equations.push_back({std::move(op), r[static_cast<std::size_t>(w.n - 2)] + 1});
  }
  {
    // L[-1,1] = d/dz[-1,1]
    DerivationOp op;
    op.name = "L[-1,1]";
    op.terms.push_back({Poly::constant(1), VarId::z(-1, 1)});
    sys.equations.push_back({std::move(op), r[static_cast<std::size_t>(w.n - 1)] + 1});
  }
  return sys;
}

std::vector<EulerOp> euler_family(const HighestWeight& w) {
  w.validate();
  std::vector<EulerOp> family;
  if (w.algebra == Algebra::B) {
    for (int i = w.n; i >= 2; --i) {
      EulerOp op;
      op.name = "F[" + std::to_string(-i) + "," + std::to_string(-i) + "]";
      op.terms.push_back({-1, VarId::z(-i, -1)});
      op.terms.push_back({-1, VarId::z(-i, 1)});
      op.shift2 = w.entries2[static_cast<std::size_t>(w.n - i)];
      family.push_back(std::move(op));
    }
    EulerOp op;
    op.name = "F[-1,-1]";
    for (int i = 2; i <= w.n; ++i) {
      op.terms.push_back({+1, VarId::z(-i, -1)});
      op.terms.push_back({-1, VarId::z(-i, 1)});
    }
    op.terms.push_back({-1, VarId::z(0, 1)});
    op.shift2 = w.entries2.back();
    family.push_back(std::move(op));
  } else {
    for (int i = w.n; i >= 2; --i) {
      EulerOp op;
      op.name = "E[" + std::to_string(-i) + "," + std::to_string(-i) + "]";
      op.terms.push_back({-1, VarId::z(-i, -1)});
      op.terms.push_back({-1, VarId::z(-i, 1)});
      op.shift2 = w.entries2[static_cast<std::size_t>(w.n - i)];
      family.push_back(std::move(op));
    }
    EulerOp op;
    op.name = "E[-1,-1]";
    for (int i = 2; i <= w.n; ++i) {
      op.terms.push_back({+1, VarId::z(-i, -1)});
    }
    op.terms.push_back({-1, VarId::z(-1, 1)});
    op.shift2 = w.entries2.back();
    family.push_back(std::move(op));
  }
  return family;
}

EulerOp euler_gl_plus1(int n) {
  EulerOp op;
  op.name = "E[1,1]";
  for (int i = 2; i <= n; ++i) {
    op.terms.push_back({+1, VarId::z(-i, 1)});
  }
  op.terms.push_back({+1, VarId::z(-1, 1)});
  op.shift2 = 0;
  return op;
}

std::string ExponentTuple::str() const {
  std::string s = "(" + std::to_string(p_minus1) + ";";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return s + ")";
}

Poly uv_variable_image(VarId uv) {
  const int k = -uv.row;
  assert(uv.kind == VarKind::U || uv.kind == VarKind::V);
  assert(k >= 1);
  if (k == 1) {
    // u[-1] = z[0,1]; v[-1] = 0.
    return uv.kind == VarKind::U ? Poly::variable(VarId::z(0, 1)) : Poly();
  }
  const Poly half_t2 = Poly::variable(VarId::z(0, 1), 2) * Rational(1, 2);
  const Poly a = Poly::variable(VarId::z(-k, -1));
  const Poly b = Poly::variable(VarId::z(-k, 1));
  return uv.kind == VarKind::U ? b + half_t2 * a : b - half_t2 * a;
}

Poly xy_variable_image(VarId xy) {
  const int k = -xy.row;
  assert(xy.kind == VarKind::X || xy.kind == VarKind::Y);
  assert(k >= 1);
  if (k == 1) {
    // x[-1] = z[-1,1]; y[-1] = 0.
    return xy.kind == VarKind::X ? Poly::variable(VarId::z(-1, 1)) : Poly();
  }
  const Poly s = Poly::variable(VarId::z(-1, 1));
  const Poly a = Poly::variable(VarId::z(-k, -1));
  const Poly b = Poly::variable(VarId::z(-k, 1));
  return xy.kind == VarKind::X ? b + s * a : b - s * a;
}

namespace {

Poly expand_transformed(const ExponentTuple& t, int n, BasisForm form, bool uv) {
  assert(static_cast<int>(t.pairs.size()) == n - 1);
  auto head = [&](int k) { return uv ? VarId::u(-k) : VarId::x(-k); };
  auto tail = [&](int k) { return uv ? VarId::v(-k) : VarId::y(-k); };

  // Build the monomial in transformed variables, then push it down to Z.
  Poly f = Poly::variable(head(1)).pow(t.p_minus1);
  for (int k = 2; k <= n; ++k) {
    const auto [p, q] = t.pairs[static_cast<std::size_t>(k - 2)];
    const Poly hk = Poly::variable(head(k));
    const Poly tk = Poly::variable(tail(k));
    if (form == BasisForm::Paper) {
      f *= (hk + tk).pow(p) * (hk - tk).pow(q);
    } else {
      f *= hk.pow(p) * tk.pow(q);
    }
  }
  std::map<VarId, Poly> images;
  for (int k = 1; k <= n; ++k) {
    images[head(k)] = uv ? uv_variable_image(head(k)) : xy_variable_image(head(k));
    images[tail(k)] = uv ? uv_variable_image(tail(k)) : xy_variable_image(tail(k));
  }
  return substitute(f, images);
}

}  // namespace

Poly expand_uv_monomial(const ExponentTuple& t, int n, BasisForm form) {
  return expand_transformed(t, n, form, /*uv=*/true);
}

Poly expand_xy_monomial(const ExponentTuple& t, int n, BasisForm form) {
  return expand_transformed(t, n, form, /*uv=*/false);
}

}  // namespace gtz
