#include "homnlie/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace homnlie {

TraceForm TraceForm::compose(const RMatrix& m) const {
  if (m.rows() != coefficients.size())
    throw std::invalid_argument("TraceForm::compose: shape mismatch");
  RVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = dot(coefficients, m.column(j));
  return TraceForm(std::move(out));
}

HomNLieAlgebra::HomNLieAlgebra(std::string name, int dim, int arity, VectorTensor bracket,
                               std::vector<LinearEndomorphism> twists,
                               bool multiplicative_declared)
    : name_(std::move(name)),
      dim_(dim),
      arity_(arity),
      bracket_(std::move(bracket)),
      twists_(std::move(twists)),
      multiplicative_declared_(multiplicative_declared) {
  if (dim_ < 1) throw std::invalid_argument("HomNLieAlgebra: dimension must be positive");
  if (arity_ < 2) throw std::invalid_argument("HomNLieAlgebra: arity must be at least 2");
  if (bracket_.arity() != arity_ || bracket_.dim() != dim_)
    throw std::invalid_argument("HomNLieAlgebra: bracket shape mismatch");
  if (twists_.size() != static_cast<std::size_t>(arity_ - 1))
    throw std::invalid_argument("HomNLieAlgebra: expected arity-1 twist maps");
  for (const auto& t : twists_)
    if (t.rows() != static_cast<std::size_t>(dim_) || t.cols() != static_cast<std::size_t>(dim_))
      throw std::invalid_argument("HomNLieAlgebra: twist map shape mismatch");
  if (multiplicative_declared_ && !uniform_twists())
    throw std::invalid_argument("HomNLieAlgebra: declared multiplicative but twists differ");
}

bool HomNLieAlgebra::uniform_twists() const {
  for (std::size_t i = 1; i < twists_.size(); ++i)
    if (twists_[i] != twists_[0]) return false;
  return true;
}

const LinearEndomorphism& HomNLieAlgebra::alpha() const {
  if (!uniform_twists())
    throw std::invalid_argument("HomNLieAlgebra::alpha: twist maps are not all equal");
  return twists_[0];
}

RVector HomNLieAlgebra::eval_bracket(const std::vector<RVector>& args) const {
  return bracket_.eval(args);
}

std::vector<NambuDefect> hom_nambu_defect(const HomNLieAlgebra& alg) {
  const int m = alg.arity();
  const int d = alg.dim();
  std::vector<NambuDefect> out;
  std::vector<RVector> basis;
  for (int i = 1; i <= d; ++i) basis.push_back(unit_vector(d, i));

  for (const auto& xs : increasing_tuples(d, m - 1)) {
    std::vector<RVector> ax(m - 1);
    for (int i = 0; i < m - 1; ++i) ax[i] = alg.twists()[i].apply(basis[xs[i] - 1]);

    MultiIndex ys(m, 1);
    while (true) {
      std::vector<RVector> yv(m);
      for (int i = 0; i < m; ++i) yv[i] = basis[ys[i] - 1];

      std::vector<RVector> lhs_args = ax;
      lhs_args.push_back(alg.eval_bracket(yv));
      RVector lhs = alg.eval_bracket(lhs_args);

      RVector rhs = zero_vector(d);
      for (int i = 0; i < m; ++i) {
        std::vector<RVector> args(m);
        for (int j = 0; j < m; ++j) {
          if (j < i)
            args[j] = alg.twists()[j].apply(yv[j]);
          else if (j == i) {
            std::vector<RVector> inner(m);
            for (int k = 0; k < m - 1; ++k) inner[k] = basis[xs[k] - 1];
            inner[m - 1] = yv[i];
            args[j] = alg.eval_bracket(inner);
          } else
            args[j] = alg.twists()[j - 1].apply(yv[j]);
        }
        rhs = add(rhs, alg.eval_bracket(args));
      }

      RVector res = sub(lhs, rhs);
      if (!is_zero_vector(res)) out.push_back({xs, ys, std::move(res)});

      int i = m - 1;
      while (i >= 0 && ys[i] == d) --i;
      if (i < 0) break;
      ++ys[i];
      for (int j = i + 1; j < m; ++j) ys[j] = 1;
    }
  }
  return out;
}

MultiplicativityCheck is_multiplicative(const HomNLieAlgebra& alg) {
  const auto& a = alg.alpha();  // throws on non-uniform twists
  const int d = alg.dim();
  for (const auto& key : increasing_tuples(d, alg.arity())) {
    std::vector<RVector> args, mapped;
    for (int i : key) {
      args.push_back(unit_vector(d, i));
      mapped.push_back(a.apply(unit_vector(d, i)));
    }
    if (a.apply(alg.eval_bracket(args)) != alg.eval_bracket(mapped)) return {false, key};
  }
  return {true, std::nullopt};
}

bool is_weak_morphism(const RMatrix& f, const HomNLieAlgebra& a, const HomNLieAlgebra& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("is_weak_morphism: arity mismatch");
  if (f.cols() != static_cast<std::size_t>(a.dim()) ||
      f.rows() != static_cast<std::size_t>(b.dim()))
    throw std::invalid_argument("is_weak_morphism: map shape mismatch");
  for (const auto& key : increasing_tuples(a.dim(), a.arity())) {
    std::vector<RVector> args, mapped;
    for (int i : key) {
      args.push_back(unit_vector(a.dim(), i));
      mapped.push_back(f.apply(unit_vector(a.dim(), i)));
    }
    if (f.apply(a.eval_bracket(args)) != b.eval_bracket(mapped)) return false;
  }
  return true;
}

bool is_morphism(const RMatrix& f, const HomNLieAlgebra& a, const HomNLieAlgebra& b) {
  if (!is_weak_morphism(f, a, b)) return false;
  for (int i = 0; i < a.arity() - 1; ++i)
    if (f * a.twists()[i] != b.twists()[i] * f) return false;
  return true;
}

bool is_subalgebra(const HomNLieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != static_cast<std::size_t>(alg.dim()))
    throw std::invalid_argument("is_subalgebra: ambient mismatch");
  for (const auto& t : alg.twists())
    for (const auto& v : s.basis())
      if (!s.contains(t.apply(v))) return false;
  for (const auto& tuple : increasing_tuples(static_cast<int>(s.dim()), alg.arity())) {
    std::vector<RVector> args;
    for (int i : tuple) args.push_back(s.basis()[i - 1]);
    if (!s.contains(alg.eval_bracket(args))) return false;
  }
  return true;
}

bool is_ideal(const HomNLieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != static_cast<std::size_t>(alg.dim()))
    throw std::invalid_argument("is_ideal: ambient mismatch");
  for (const auto& t : alg.twists())
    for (const auto& v : s.basis())
      if (!s.contains(t.apply(v))) return false;
  const int d = alg.dim();
  for (const auto& xs : increasing_tuples(d, alg.arity() - 1)) {
    for (const auto& v : s.basis()) {
      std::vector<RVector> args;
      for (int i : xs) args.push_back(unit_vector(d, i));
      args.push_back(v);
      if (!s.contains(alg.eval_bracket(args))) return false;
    }
  }
  return true;
}

void require_valid(const HomNLieAlgebra& alg) {
  auto defects = hom_nambu_defect(alg);
  if (!defects.empty()) {
    std::ostringstream os;
    os << "algebra '" << alg.name() << "' violates the Hom-Nambu identity at x="
       << format_tuple(defects[0].x_tuple) << " y=" << format_tuple(defects[0].y_tuple)
       << " residual=" << format_vector(defects[0].residual) << " (" << defects.size()
       << " defects total)";
    throw std::invalid_argument(os.str());
  }
  if (alg.multiplicative_declared()) {
    auto mc = is_multiplicative(alg);
    if (!mc.ok) {
      std::ostringstream os;
      os << "algebra '" << alg.name()
         << "' declared multiplicative but fails at tuple " << format_tuple(*mc.witness);
      throw std::invalid_argument(os.str());
    }
  }
}

std::string format_tuple(const MultiIndex& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string format_vector(const RVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace homnlie
