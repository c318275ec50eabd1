// Copyright 2026 The twistfrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "twistfrt/twisted_frt.hpp"

#include <algorithm>

namespace twistfrt {

namespace {

NCPoly entry(const AlphabetPtr& alphabet, int row, int col) {
  return NCPoly::letter(alphabet, *alphabet->matrix_entry(row, col));
}

NCPoly coord(const AlphabetPtr& alphabet, int i) {
  return NCPoly::letter(alphabet, *alphabet->coordinate(i));
}

// Zero test of a tensor after factorwise reduction.
template <std::size_t N>
void expect_tensor_zero(CheckResult& result, const std::string& location, const Tensor<N>& t,
                        const std::array<const RewriteSystem*, N>& systems) {
  const Tensor<N> reduced = reduce_factors(t, systems);
  bool certified = true;
  for (const auto& [key, c] : t.terms()) {
    for (std::size_t i = 0; i < N; ++i) {
      if (systems[i] &&
          static_cast<long>(key[i].size()) > systems[i]->confluence().certified_degree) {
        certified = false;
      }
    }
  }
  result.expect_zero(location, reduced.str(), reduced.is_zero(), certified);
}

}  // namespace

TwistTensor::TwistTensor(int n, bool diagonal) : n_(n), diagonal_(diagonal) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "twist dimension must be positive");
  const std::size_t count = diagonal ? static_cast<std::size_t>(n * n * n)
                                     : static_cast<std::size_t>(n * n * n * n * n * n);
  values_.assign(count, Scalar(diagonal ? 1 : 0));
}

TwistTensor TwistTensor::flip(int n) { return TwistTensor(n, true); }
TwistTensor TwistTensor::diagonal(int n) { return TwistTensor(n, true); }
TwistTensor TwistTensor::full(int n) { return TwistTensor(n, false); }

std::size_t TwistTensor::g_index(int i, int j, int k) const {
  for (int x : {i, j, k}) {
    if (x < 1 || x > n_) throw Error(ErrorCode::InvalidArgument, "twist index out of range");
  }
  return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * n_ + (k - 1));
}

std::size_t TwistTensor::gamma_index(int i, int j, int n, int k, int l, int m) const {
  std::size_t idx = 0;
  for (int x : {i, j, n, k, l, m}) {
    if (x < 1 || x > n_) throw Error(ErrorCode::InvalidArgument, "twist index out of range");
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x - 1);
  }
  return idx;
}

const Scalar& TwistTensor::g(int i, int j, int k) const {
  if (!diagonal_) throw Error(ErrorCode::InvalidArgument, "g(i,j,k) requires a diagonal twist");
  return values_[g_index(i, j, k)];
}

void TwistTensor::set_g(int i, int j, int k, Scalar value) {
  if (!diagonal_) throw Error(ErrorCode::InvalidArgument, "g(i,j,k) requires a diagonal twist");
  values_[g_index(i, j, k)] = std::move(value);
}

Scalar TwistTensor::gamma(int i, int j, int n, int k, int l, int m) const {
  if (diagonal_) {
    if (m == i && l == j && k == n) return values_[g_index(i, j, k)];
    gamma_index(i, j, n, k, l, m);  // range check
    return Scalar(0);
  }
  return values_[gamma_index(i, j, n, k, l, m)];
}

void TwistTensor::set_gamma(int i, int j, int n, int k, int l, int m, Scalar value) {
  if (diagonal_) throw Error(ErrorCode::InvalidArgument, "diagonal twist has no free entries");
  values_[gamma_index(i, j, n, k, l, m)] = std::move(value);
}

TwistTensor TwistTensor::map(const std::function<Scalar(const Scalar&)>& f) const {
  TwistTensor r = *this;
  for (auto& v : r.values_) v = f(v);
  return r;
}

MMatrix build_M(const TwistTensor& twist) {
  const int n = twist.dim();
  const AlphabetPtr alphabet = Alphabet::standard(n);
  MMatrix m(n, alphabet);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          NCPoly sum(alphabet);
          for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
              for (int p = 1; p <= n; ++p) {
                const Scalar c = twist.gamma(a, j, b, l, p, k);
                if (c.is_zero()) continue;
                sum += entry(alphabet, i, a) * entry(alphabet, p, b) * c;
              }
            }
          }
          m.at(i, j, k, l) = std::move(sum);
        }
      }
    }
  }
  return m;
}

MMatrix build_M_diagonal(const TwistTensor& twist) {
  const int n = twist.dim();
  const AlphabetPtr alphabet = Alphabet::standard(n);
  MMatrix m(n, alphabet);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          m.at(i, j, k, l) = entry(alphabet, i, k) * entry(alphabet, j, l) * twist.g(k, j, l);
  return m;
}

std::vector<NCPoly> ideal_generators(const EndoTensor& b, const MMatrix& m) {
  if (b.dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "B and M have different dimensions");
  const MMatrix bm = compose(b, m);
  const MMatrix mb = compose(m, b);
  const int n = m.dim();
  std::vector<NCPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          NCPoly d = bm(i, j, k, l) - mb(i, j, k, l);
          if (!d.is_zero()) out.push_back(std::move(d));
        }
  return echelon_basis(out);
}

std::vector<NCPoly> cross_relations(const TwistTensor& twist) {
  const int n = twist.dim();
  const AlphabetPtr alphabet = Alphabet::standard(n, true);
  std::vector<NCPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        NCPoly r = coord(alphabet, i) * entry(alphabet, j, k);
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m)
            for (int nn = 1; nn <= n; ++nn) {
              const Scalar c = twist.gamma(i, j, nn, k, l, m);
              if (!c.is_zero()) r -= entry(alphabet, l, nn) * coord(alphabet, m) * c;
            }
        out.push_back(std::move(r));
      }
  return out;
}

TensorNCPoly coaction(const TwistTensor& twist, const Word& coordinates) {
  const int n = twist.dim();
  const AlphabetPtr h = Alphabet::standard(n);
  const AlphabetPtr v = Alphabet::coordinates(n);

  struct Term {
    Word hw;
    Word vw;
    Scalar c;
  };
  // A matrix entry in transit through a coordinate word.
  struct Moving {
    int row;
    int col;
    Word suffix;
    Scalar c;
  };

  std::vector<Term> state{{Word(), Word(), Scalar(1)}};
  for (std::size_t pos = 0; pos < coordinates.size(); ++pos) {
    const int j = v->letter(coordinates[pos]).row;
    std::vector<Term> next;
    for (const Term& t : state) {
      for (int s = 1; s <= n; ++s) {
        // δ(e_j) contributes T^s_j ⊗ e_s; move T^s_j left past t.vw.
        std::vector<Moving> moving{{j, s, Word(), Scalar(1)}};
        for (std::size_t q = t.vw.size(); q-- > 0;) {
          const int i = v->letter(t.vw[q]).row;
          std::vector<Moving> moved;
          for (const Moving& x : moving) {
            for (int l = 1; l <= n; ++l)
              for (int m = 1; m <= n; ++m)
                for (int nn = 1; nn <= n; ++nn) {
                  const Scalar c = twist.gamma(i, x.row, nn, x.col, l, m);
                  if (c.is_zero()) continue;
                  moved.push_back({l, nn, Word::of(*v->coordinate(m)) + x.suffix, x.c * c});
                }
          }
          moving = std::move(moved);
        }
        for (const Moving& x : moving) {
          Word hw = t.hw;
          hw.push_back(*h->matrix_entry(x.row, x.col));
          Word vw = x.suffix;
          vw.push_back(*v->coordinate(s));
          next.push_back({std::move(hw), std::move(vw), t.c * x.c});
        }
      }
    }
    state = std::move(next);
  }
  TensorNCPoly out({h, v});
  for (const Term& t : state) out.add_term({t.hw, t.vw}, t.c);
  return out;
}

BialgebraPresentation assemble_bialgebra(const EndoTensor& b, const TwistTensor& twist,
                                         int max_degree) {
  if (b.dim() != twist.dim()) throw Error(ErrorCode::DimMismatch, "B and twist dimensions differ");
  const MMatrix m = twist.is_diagonal() ? build_M_diagonal(twist) : build_M(twist);
  return presentation_from_relations(b.dim(), ideal_generators(b, m), max_degree);
}

BialgebraPresentation presentation_from_relations(int n, const std::vector<NCPoly>& relations,
                                                  int max_degree) {
  const AlphabetPtr alphabet = Alphabet::standard(n);
  std::vector<NCPoly> rebased;
  for (const auto& r : relations) rebased.push_back(r.rebased(alphabet));
  return BialgebraPresentation{alphabet,
                               RewriteSystem::from_relations(alphabet, rebased, max_degree),
                               standard_coproduct(alphabet), standard_counit(alphabet),
                               std::nullopt};
}

RewriteSystem combined_system(const RewriteSystem& h, const RewriteSystem& plane,
                              const TwistTensor& twist, int max_degree) {
  const AlphabetPtr alphabet = Alphabet::standard(twist.dim(), true);
  return combine(alphabet, {&h, &plane}, cross_relations(twist), max_degree);
}

CheckResult check_multiplicative(const MMatrix& m, const RewriteSystem& sys) {
  CheckResult result("multiplicative");
  const AlphabetPtr& alphabet = sys.alphabet();
  const CoproductTable table = standard_coproduct(alphabet);
  const MMatrix mr = m.map([&](const NCPoly& x) { return x.rebased(alphabet); });
  const int n = m.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          TensorNCPoly diff = coproduct(mr(i, j, k, l), table);
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
              diff = diff - TensorNCPoly::pure({mr(i, j, r, s), mr(r, s, k, l)});
          expect_tensor_zero<2>(result, index_label(i, j, k, l), diff, {&sys, &sys});
        }
  return result;
}

CheckResult check_counit(const MMatrix& m) {
  CheckResult result("counit");
  const CounitTable table = standard_counit(m.alphabet());
  const int n = m.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const Scalar expected((i == k && j == l) ? 1 : 0);
          const Scalar got = counit(m(i, j, k, l), table);
          if (got != expected) result.fail(index_label(i, j, k, l), (got - expected).str());
        }
  return result;
}

CheckResult check_coideal(const EndoTensor& b, const MMatrix& m, const RewriteSystem& sys) {
  CheckResult result("coideal");
  const AlphabetPtr& alphabet = sys.alphabet();
  const CoproductTable delta = standard_coproduct(alphabet);
  const CounitTable eps = standard_counit(alphabet);
  std::vector<NCPoly> generators;
  for (const auto& g : ideal_generators(b, m)) generators.push_back(g.rebased(alphabet));
  for (const auto& r : sys.relations()) generators.push_back(r);
  for (const auto& r : generators) {
    const std::string label = r.str();
    expect_tensor_zero<2>(result, "Δ(" + label + ")", coproduct(r, delta), {&sys, &sys});
    const Scalar e = counit(r, eps);
    if (!e.is_zero()) result.fail("ε(" + label + ")", e.str());
  }
  result.details["generators"] = generators.size();
  return result;
}

CheckResult check_comodule_diagrams(const EndoTensor& b, const TwistTensor& twist, const MMatrix& m,
                                    const RewriteSystem& sys_h, const RewriteSystem& sys_a) {
  CheckResult result("comodule-diagrams");
  const int n = twist.dim();
  if (b.dim() != n || m.dim() != n) throw Error(ErrorCode::DimMismatch, "dimension mismatch");
  const AlphabetPtr h = Alphabet::standard(n);
  const AlphabetPtr v = Alphabet::coordinates(n);
  if (!(*sys_h.alphabet() == *h) || !(*sys_a.alphabet() == *v)) {
    throw Error(ErrorCode::AlphabetMismatch, "comodule check needs T-letter and coordinate systems");
  }
  const CoproductTable delta = standard_coproduct(h);
  const CounitTable eps = standard_counit(h);
  const EndoTensor frak = EndoTensor::identity(n) - b;

  auto pair_word = [&](int i, int j) {
    return Word({*v->coordinate(i), *v->coordinate(j)});
  };
  auto apply_frak = [&](const TensorNCPoly& t) {
    TensorNCPoly out({h, v});
    for (const auto& [key, c] : t.terms()) {
      const int r = v->letter(key[1][0]).row;
      const int s = v->letter(key[1][1]).row;
      for (int u = 1; u <= n; ++u)
        for (int w = 1; w <= n; ++w) {
          const Scalar f = frak(r, s, u, w);
          if (!f.is_zero()) out.add_term({key[0], pair_word(u, w)}, c * f);
        }
    }
    return out;
  };

  std::size_t failures_before = 0;
  auto leg = [&](const char* name) {
    result.details[name] = result.failures == failures_before ? "pass" : "fail";
    failures_before = result.failures;
  };

  std::vector<TensorNCPoly> deltas;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) deltas.push_back(coaction(twist, pair_word(i, j)));
  auto delta_of = [&](int i, int j) -> const TensorNCPoly& {
    return deltas[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      TensorNCPoly expected({h, v});
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          expected = expected + TensorNCPoly::pure({m(i, j, r, s), NCPoly(v, pair_word(r, s))});
      const TensorNCPoly diff = delta_of(i, j) - expected;
      if (!diff.is_zero()) result.fail("δ(e" + std::to_string(i) + "e" + std::to_string(j) + ")",
                                       diff.str());
    }
  leg("coaction-matches-M");

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string at = "e" + std::to_string(i) + "e" + std::to_string(j);
      const TensorNCPoly& d = delta_of(i, j);
      const Tensor<3> lhs = coproduct_at<2>(d, 0, delta);
      Tensor<3> rhs({h, h, v});
      for (const auto& [key, c] : d.terms()) {
        const TensorNCPoly inner = coaction(twist, key[1]);
        for (const auto& [ik, ic] : inner.terms()) rhs.add_term({key[0], ik[0], ik[1]}, c * ic);
      }
      expect_tensor_zero<3>(result, at, lhs - rhs, {&sys_h, &sys_h, &sys_a});
    }
  leg("coassociativity");

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly got(v);
      for (const auto& [key, c] : delta_of(i, j).terms())
        got += NCPoly(v, key[1], c * counit(NCPoly(h, key[0]), eps));
      const NCPoly diff = got - NCPoly(v, pair_word(i, j));
      if (!diff.is_zero())
        result.fail("e" + std::to_string(i) + "e" + std::to_string(j), diff.str());
    }
  leg("counit");

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const TensorNCPoly lhs = apply_frak(delta_of(i, j));
      TensorNCPoly rhs({h, v});
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const Scalar f = frak(i, j, k, l);
          if (!f.is_zero()) rhs = rhs + delta_of(k, l) * f;
        }
      expect_tensor_zero<2>(result, "e" + std::to_string(i) + "e" + std::to_string(j), lhs - rhs,
                            {&sys_h, &sys_a});
    }
  leg("equivariance");
  return result;
}

}  // namespace twistfrt
