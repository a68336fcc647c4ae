#include "nodal/graded_ideal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/poly_text.hpp"

namespace nodal {

IdealGens::IdealGens(GradedRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (!(g.ring() == ring_)) throw RingMismatch("generator over a different ring");
}

std::vector<int> IdealGens::degrees() const {
  std::vector<int> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.degree());
  return out;
}

// ---------------------------------------------------------------------------
// GradedIdeal

GradedIdeal::GradedIdeal(IdealGens gens, int degree_guard, std::size_t entry_guard)
    : gens_(std::move(gens)), degree_guard_(degree_guard), entry_guard_(entry_guard) {}

const std::vector<std::uint32_t>& GradedIdeal::up(int k) {
  // Tables for degrees 0..k are produced together in extend_to.
  return up_[static_cast<std::size_t>(k)];
}

const std::vector<std::int32_t>& GradedIdeal::down(int k) {
  return down_[static_cast<std::size_t>(k)];
}

const RowBasis& GradedIdeal::piece(int k) {
  if (k < 0) throw PreconditionError("negative degree");
  extend_to(k);
  return pieces_[static_cast<std::size_t>(k)];
}

std::int64_t GradedIdeal::hilbert(int k) {
  return static_cast<std::int64_t>(piece(k).codim());
}

HilbertTable GradedIdeal::hilbert_table(int kmax) {
  std::vector<std::int64_t> v;
  for (int k = 0; k <= kmax; ++k) v.push_back(hilbert(k));
  return HilbertTable(std::move(v));
}

std::vector<Scalar> GradedIdeal::normal_form(const Polynomial& f) {
  if (!(f.ring() == ring())) throw RingMismatch("polynomial over a different ring");
  return piece(f.degree()).residual(f.coefficients());
}

bool GradedIdeal::contains(const Polynomial& f) {
  auto r = normal_form(f);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

void GradedIdeal::extend_to(int k) {
  if (k > degree_guard_)
    throw GuardExceeded("degree " + std::to_string(k) + " exceeds the guard " +
                        std::to_string(degree_guard_));
  const int nv = ring().nvars();
  while (static_cast<int>(pieces_.size()) <= k) {
    const int d = static_cast<int>(pieces_.size());
    // Monomial tables for degree d.
    auto basis = monomial_basis(ring(), d, degree_guard_);
    std::vector<int> flat;
    flat.reserve(basis.size() * nv);
    for (const auto& m : basis)
      flat.insert(flat.end(), m.exponents().begin(), m.exponents().end());
    std::vector<std::uint32_t> upt;
    std::vector<std::int32_t> downt(basis.size() * nv, -1);
    if (d > 0) {
      const auto& prev = exps_[d - 1];
      const std::size_t prev_count = prev.size() / nv;
      upt.resize(prev_count * nv);
      std::vector<int> e(nv);
      for (std::size_t v = 0; v < prev_count; ++v) {
        for (int i = 0; i < nv; ++i) {
          std::copy(prev.begin() + v * nv, prev.begin() + (v + 1) * nv, e.begin());
          e[i] += 1;
          const auto u = monomial_rank(e, d);
          upt[v * nv + i] = static_cast<std::uint32_t>(u);
          downt[u * nv + i] = static_cast<std::int32_t>(v);
        }
      }
    }
    exps_.push_back(std::move(flat));
    up_.push_back(std::move(upt));
    down_.push_back(std::move(downt));
    build_degree(d);
  }
}

void GradedIdeal::build_degree(int k) {
  const GradedRing& R = ring();
  const PrimeField& F = R.field();
  const Scalar p = F.modulus();
  const int nv = R.nvars();
  const std::size_t c = R.dim(k);

  std::vector<const Polynomial*> new_gens;
  for (const auto& g : gens_.gens())
    if (g.degree() == k && !g.is_zero()) new_gens.push_back(&g);

  if (k == 0) {
    pieces_.push_back(new_gens.empty() ? RowBasis::zero(F, 1) : RowBasis::full(F, 1));
    return;
  }

  const RowBasis& prev = pieces_[k - 1];
  const RowBasis* prev2 = k >= 2 ? &pieces_[k - 2] : nullptr;
  const auto& upk = up(k);
  const auto& downk = down(k);
  const auto& downk1 = down(k - 1);
  const auto& ek = exps_[k];
  const auto& prev_free = prev.free_columns();
  const std::size_t hprev = prev_free.size();

  // Columns: monomials of the form x_i * (standard monomial of degree k-1).
  std::vector<std::int32_t> cpos(c, -1);
  for (auto q : prev_free)
    for (int i = 0; i < nv; ++i) cpos[upk[q * nv + i]] = 0;
  std::vector<std::size_t> ccols;
  for (std::size_t u = 0; u < c; ++u)
    if (cpos[u] == 0) {
      cpos[u] = static_cast<std::int32_t>(ccols.size());
      ccols.push_back(u);
    }
  const std::size_t nc = ccols.size();

  auto first_var = [&](std::size_t u) {
    int j = 0;
    while (ek[u * nv + j] == 0) ++j;
    return j;
  };
  // vec += coeff * x_i * tail(row of the pivot m) in C-coordinates.
  auto add_shifted_tail = [&](std::vector<Scalar>& vec, std::size_t m, int i,
                              Scalar coeff) {
    const auto r = prev.pivot_row(m);
    auto t = prev.tail(static_cast<std::size_t>(r));
    for (std::size_t s = 0; s < hprev; ++s) {
      if (t[s] == 0) continue;
      const auto col = static_cast<std::size_t>(cpos[upk[prev_free[s] * nv + i]]);
      vec[col] = F.add(vec[col], F.mul(coeff, t[s]));
    }
  };
  // vec += coeff * Phi(u), Phi projecting S_k onto the C-span modulo I_k.
  auto add_phi = [&](std::vector<Scalar>& vec, std::size_t u, Scalar coeff) {
    if (cpos[u] >= 0) {
      const auto col = static_cast<std::size_t>(cpos[u]);
      vec[col] = F.add(vec[col], coeff);
      return;
    }
    const int j = first_var(u);
    add_shifted_tail(vec, static_cast<std::size_t>(downk[u * nv + j]), j, F.neg(coeff));
  };

  EchelonBuilder builder(F, nc, entry_guard_);
  std::vector<Scalar> rel(nc);
  std::vector<int> divisors;
  std::vector<int> processed;
  for (std::size_t u = 0; u < c; ++u) {
    divisors.clear();
    for (int i = 0; i < nv; ++i) {
      if (ek[u * nv + i] == 0) continue;
      const auto m = downk[u * nv + i];
      if (prev.pivot_row(static_cast<std::size_t>(m)) >= 0) divisors.push_back(i);
    }
    if (divisors.empty()) continue;
    const bool in_c = cpos[u] >= 0;
    const int lead = divisors.front();
    processed.clear();
    for (int i : divisors) {
      const auto mi = static_cast<std::size_t>(downk[u * nv + i]);
      bool redundant = false;
      for (int other : processed) {
        const auto nu = downk1[mi * nv + other];
        if (prev2 != nullptr && nu >= 0 &&
            prev2->pivot_row(static_cast<std::size_t>(nu)) >= 0) {
          redundant = true;
          break;
        }
      }
      processed.push_back(i);
      if (redundant) continue;
      if (!in_c && i == lead) continue;  // maps to zero under Phi
      std::fill(rel.begin(), rel.end(), 0);
      if (in_c) {
        rel[static_cast<std::size_t>(cpos[u])] = 1;
        add_shifted_tail(rel, mi, i, 1);
      } else {
        add_shifted_tail(rel, mi, i, 1);
        add_shifted_tail(rel, static_cast<std::size_t>(downk[u * nv + lead]), lead,
                         p - 1);
      }
      builder.insert(rel);
    }
  }
  for (const Polynomial* g : new_gens) {
    std::fill(rel.begin(), rel.end(), 0);
    for (const auto& [m, coeff] : g->terms()) add_phi(rel, monomial_rank(m), coeff);
    builder.insert(rel);
  }

  const RowBasis cspace = builder.finish();
  const std::size_t h = cspace.codim();
  std::vector<std::size_t> pivots;
  pivots.reserve(c - h);
  std::vector<Scalar> tails;
  tails.reserve((c - h) * h);
  std::vector<Scalar> w(nc);
  for (std::size_t u = 0; u < c; ++u) {
    if (cpos[u] >= 0) {
      const auto r = cspace.pivot_row(static_cast<std::size_t>(cpos[u]));
      if (r < 0) continue;  // standard monomial
      auto t = cspace.tail(static_cast<std::size_t>(r));
      tails.insert(tails.end(), t.begin(), t.end());
    } else {
      std::fill(w.begin(), w.end(), 0);
      add_phi(w, u, 1);
      auto res = cspace.residual(w);
      for (auto s : res) tails.push_back(F.neg(s));
    }
    pivots.push_back(u);
  }
  pieces_.emplace_back(F, c, std::move(pivots), std::move(tails));
}

// ---------------------------------------------------------------------------

GradedPiece graded_piece(const IdealGens& I, int k) {
  GradedIdeal gi(I);
  return GradedPiece{I.ring(), k, gi.piece(k)};
}

GradedPiece graded_piece_direct(const IdealGens& I, int k, std::size_t entry_guard) {
  const GradedRing& R = I.ring();
  EchelonBuilder b(R.field(), R.dim(k), entry_guard);
  for (const auto& g : I.gens()) {
    if (g.is_zero() || g.degree() > k) continue;
    for (const auto& m : monomial_basis(R, k - g.degree()))
      b.insert(multiply(g, m).coefficients());
  }
  return GradedPiece{R, k, b.finish()};
}

HilbertTable hilbert_fn(const IdealGens& I, int kmax) {
  GradedIdeal gi(I);
  return gi.hilbert_table(kmax);
}

bool contains(const Polynomial& f, const IdealGens& I) {
  GradedIdeal gi(I);
  return gi.contains(f);
}

IdealGens ideal_square(const IdealGens& I) {
  std::vector<Polynomial> out;
  const auto& g = I.gens();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) out.push_back(multiply(g[i], g[j]));
  return IdealGens(I.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// Hyperplane sections

LinearSection quotient_by_linear(const IdealGens& I, const Polynomial& l, int kmax) {
  const GradedRing& R = I.ring();
  if (!(l.ring() == R)) throw RingMismatch("linear form over a different ring");
  if (l.degree() != 1 || l.is_zero())
    throw PreconditionError("quotient_by_linear needs a nonzero linear form");
  if (R.n() < 2) throw PreconditionError("hyperplane section of P^1 is not supported");
  const PrimeField& F = R.field();
  const int nv = R.nvars();

  int elim = -1;
  std::vector<Scalar> coeff(nv, 0);
  for (int i = 0; i < nv; ++i) {
    coeff[i] = l.coefficient(Monomial::variable(nv, i));
    if (coeff[i] != 0) elim = i;
  }

  // Multiplication by l must be injective on (S/I)_k for k <= kmax.
  GradedIdeal gi(I);
  for (int k = 0; k <= kmax; ++k) {
    const RowBasis& here = gi.piece(k);
    const RowBasis& next = gi.piece(k + 1);
    EchelonBuilder b(F, next.codim());
    auto basis = monomial_basis(R, k);
    for (auto q : here.free_columns()) {
      Polynomial lq = multiply(l, basis[q]);
      b.insert(next.residual(lq.coefficients()));
    }
    if (b.rank() != here.codim())
      throw GenericityFailure("multiplication by the linear form is not injective in degree " +
                              std::to_string(k));
  }

  GradedRing target(R.n() - 1, F);
  const Scalar inv = F.inv(coeff[elim]);
  std::vector<Polynomial> images;
  for (int i = 0, j = 0; i < nv; ++i) {
    if (i == elim) {
      images.emplace_back(target, 1);
      continue;
    }
    images.push_back(Polynomial::variable(target, j++));
  }
  // x_elim = -(1/c_elim) * sum_{i != elim} c_i x_i
  Polynomial& sub = images[elim];
  for (int i = 0, j = 0; i < nv; ++i) {
    if (i == elim) continue;
    sub.add_term(Monomial::variable(target.nvars(), j++), F.neg(F.mul(coeff[i], inv)));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(substitute(g, images));
  return LinearSection{IdealGens(target, std::move(gens)), l, elim};
}

LinearSection general_linear_section(const IdealGens& I, std::uint64_t seed, int kmax,
                                     int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Polynomial l = random_form(I.ring(), 1, derive_seed(seed, 0x11 + attempt));
    try {
      return quotient_by_linear(I, l, kmax);
    } catch (const GenericityFailure&) {
    }
  }
  throw GenericityExhausted("no general linear form found in " +
                            std::to_string(max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Points

namespace {

Point normalized(const PrimeField& F, const Point& P) {
  std::size_t lead = 0;
  while (lead < P.size() && F.reduce(P[lead]) == 0) ++lead;
  if (lead == P.size()) throw PreconditionError("the zero vector is not a projective point");
  const Scalar inv = F.inv(F.reduce(P[lead]));
  Point out(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) out[i] = F.mul(F.reduce(P[i]), inv);
  return out;
}

void check_points(const GradedRing& ring, std::span<const Point> points) {
  std::vector<Point> seen;
  for (const auto& P : points) {
    if (static_cast<int>(P.size()) != ring.nvars())
      throw DimensionMismatch("point with the wrong number of coordinates");
    Point q = normalized(ring.field(), P);
    if (std::find(seen.begin(), seen.end(), q) != seen.end())
      throw PreconditionError("repeated point");
    seen.push_back(std::move(q));
  }
}

Matrix evaluation_matrix(const GradedRing& ring, std::span<const Point> points, int k) {
  const PrimeField& F = ring.field();
  auto basis = monomial_basis(ring, k);
  Matrix m(F, points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Scalar v = 1;
      for (int i = 0; i < ring.nvars(); ++i)
        if (basis[j][i] > 0) v = F.mul(v, F.pow(F.reduce(points[r][i]), basis[j][i]));
      m.set(r, j, v);
    }
  return m;
}

}  // namespace

GradedPiece vanishing_ideal_piece(const GradedRing& ring, std::span<const Point> points,
                                  int k) {
  check_points(ring, points);
  if (points.empty()) return GradedPiece{ring, k, RowBasis::full(ring.field(), ring.dim(k))};
  return GradedPiece{ring, k, kernel(evaluation_matrix(ring, points, k))};
}

HilbertTable vanishing_hilbert(const GradedRing& ring, std::span<const Point> points,
                               int kmax) {
  check_points(ring, points);
  std::vector<std::int64_t> v;
  for (int k = 0; k <= kmax; ++k) {
    if (points.empty()) {
      v.push_back(0);
      continue;
    }
    v.push_back(static_cast<std::int64_t>(row_space(evaluation_matrix(ring, points, k)).rank()));
  }
  return HilbertTable(std::move(v));
}

// ---------------------------------------------------------------------------
// Gorenstein closure

GorensteinClosure gorenstein_closure(const IdealGens& IH, int d) {
  const GradedRing& R = IH.ring();
  const PrimeField& F = R.field();
  const int top = d + 1;
  GradedIdeal gi(IH);
  const RowBasis& ih_top = gi.piece(top);
  if (ih_top.codim() == 0)
    throw PreconditionError("h_{I_H}(d+1) = 0: no hyperplane of S_{d+1} contains (I_H)_{d+1}");

  // phi(v) = coefficient of the kept standard monomial in the normal form.
  const std::size_t kept = ih_top.free_columns().front();
  std::vector<Scalar> phi(R.dim(top), 0);
  phi[kept] = 1;
  for (std::size_t r = 0; r < ih_top.rank(); ++r)
    phi[ih_top.pivots()[r]] = F.neg(ih_top.tail(r)[0]);

  GorensteinClosure out{top, {}, {}, kept};
  std::vector<std::int64_t> h;
  for (int k = 0; k <= top; ++k) {
    auto cols = monomial_basis(R, k);
    auto rows = monomial_basis(R, top - k);
    Matrix cat(F, rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        cat.set(a, b, phi[monomial_rank(rows[a] * cols[b])]);
    RowBasis jk = kernel(cat);
    h.push_back(static_cast<std::int64_t>(jk.codim()));
    out.pieces.push_back(GradedPiece{R, k, std::move(jk)});
  }
  out.hilbert = HilbertTable(std::move(h));
  if (out.hilbert.at(top) != 1)
    throw InternalMismatch("Gorenstein closure with h_J(d+1) != 1");
  for (int k = 0; k <= top; ++k)
    if (out.hilbert.at(k) != out.hilbert.at(top - k))
      throw InternalMismatch("Gorenstein closure without the symmetry h_J(k) = h_J(d+1-k)");
  return out;
}

// ---------------------------------------------------------------------------
// Base loci

std::string_view to_string(BaseLocus b) {
  switch (b) {
    case BaseLocus::Empty: return "empty";
    case BaseLocus::Finite: return "finite";
    case BaseLocus::PositiveDimensional: return "positive-dimensional";
    case BaseLocus::Inconclusive: return "inconclusive";
  }
  return "?";
}

BaseLocusReport base_locus(const IdealGens& I, int k, int window, int max_degree) {
  const GradedRing& R = I.ring();
  if (window < 0) window = R.n() + 1;
  GradedIdeal source(I);
  const RowBasis& Ik = source.piece(k);
  std::vector<Polynomial> gens;
  for (std::size_t r = 0; r < Ik.rank(); ++r)
    gens.push_back(Polynomial::from_coefficients(R, k, Ik.row(r)));
  GradedIdeal sys(IdealGens(R, std::move(gens)));

  BaseLocusReport rep{BaseLocus::Inconclusive, k, {}};
  for (int m = k; m <= max_degree; ++m) {
    rep.trace.push_back(sys.hilbert(m));
    const auto n = rep.trace.size();
    const std::int64_t hm = rep.trace.back();
    if (static_cast<int>(n) >= window &&
        std::all_of(rep.trace.end() - window, rep.trace.end(),
                    [&](std::int64_t v) { return v == hm; })) {
      rep.verdict = hm == 0 ? BaseLocus::Empty : BaseLocus::Finite;
      rep.plateau = hm;
      return rep;
    }
    if (n >= 2 && m - 1 >= 1) {
      const std::int64_t hprev = rep.trace[n - 2];
      if (hm == macaulay_upper_bound(hprev, m - 1)) {
        // Gotzmann persistence: the growth from here on is maximal.
        if (hm > hprev) {
          rep.verdict = BaseLocus::PositiveDimensional;
        } else {
          rep.verdict = hm == 0 ? BaseLocus::Empty : BaseLocus::Finite;
          rep.plateau = hm;
        }
        return rep;
      }
    }
  }
  return rep;
}

std::optional<bool> finite_base_locus(const IdealGens& I, int k) {
  switch (base_locus(I, k).verdict) {
    case BaseLocus::Empty:
    case BaseLocus::Finite: return true;
    case BaseLocus::PositiveDimensional: return false;
    case BaseLocus::Inconclusive: return std::nullopt;
  }
  return std::nullopt;
}

IdealGens pullback_gens(const IdealGens& I, std::span<const Polynomial> images) {
  const GradedRing& R = I.ring();
  if (static_cast<int>(images.size()) != R.nvars())
    throw DimensionMismatch("pullback needs one image per variable");
  const int t = images.front().degree();
  IdealGens image_ideal(R, std::vector<Polynomial>(images.begin(), images.end()));
  const auto locus = base_locus(image_ideal, t);
  if (locus.verdict != BaseLocus::Empty)
    throw PreconditionError(std::string("pullback images do not certify an empty common "
                                        "zero locus (base locus ") +
                            std::string(to_string(locus.verdict)) + ")");
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(substitute(g, images));
  return IdealGens(R, std::move(gens));
}

// ---------------------------------------------------------------------------
// Ideal files

IdealGens parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<GradedRing> ring;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!ring) {
      int n = -1;
      long long p = -1;
      std::istringstream hdr(line.substr(first));
      std::string word;
      hdr >> word;
      if (word != "ring") throw ParseError("expected header 'ring n=<n> p=<p>'", lineno, first + 1);
      while (hdr >> word) {
        if (word.rfind("n=", 0) == 0) n = std::stoi(word.substr(2));
        else if (word.rfind("p=", 0) == 0) p = std::stoll(word.substr(2));
        else throw ParseError("unknown header field '" + word + "'", lineno, first + 1);
      }
      if (n < 0 || p < 0) throw ParseError("header needs both n= and p=", lineno, first + 1);
      try {
        ring.emplace(n, PrimeField(static_cast<std::uint64_t>(p)));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), lineno, first + 1);
      }
      continue;
    }
    try {
      gens.push_back(parse_polynomial(*ring, line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), lineno, e.column());
    }
  }
  if (!ring) throw ParseError("missing 'ring n=<n> p=<p>' header", lineno, 1);
  return IdealGens(*ring, std::move(gens));
}

IdealGens read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal(ss.str());
}

std::string to_text(const IdealGens& I) {
  std::string out = "ring n=" + std::to_string(I.ring().n()) +
                    " p=" + std::to_string(I.ring().field().modulus()) + "\n";
  for (const auto& g : I.gens()) out += to_string(g) + "\n";
  return out;
}

}  // namespace nodal
