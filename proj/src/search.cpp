#include "g5rp/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>

namespace g5rp {

HeightBound::HeightBound(long n) : N(n) {
  if (n < 1) throw MathError("height bound must be >= 1");
}

bool HeightBound::contains(const TValue& t) const {
  if (t.inf) return true;
  return abs(t.t.get_num()) <= N && t.t.get_den() <= N;
}

long long HeightBound::size() const {
  long long c = 1;
  for (long n = 1; n <= N; ++n)
    for (long m = -N; m <= N; ++m)
      if (std::gcd(m, n) == 1) ++c;
  return c;
}

namespace {

constexpr long kMod = 45045;  // 63 * 65 * 11

struct QRTables {
  std::array<bool, 64> q64{};
  std::array<bool, 63> q63{};
  std::array<bool, 65> q65{};
  std::array<bool, 11> q11{};
  QRTables() {
    for (int i = 0; i < 64; ++i) q64[(i * i) % 64] = true;
    for (int i = 0; i < 63; ++i) q63[(i * i) % 63] = true;
    for (int i = 0; i < 65; ++i) q65[(i * i) % 65] = true;
    for (int i = 0; i < 11; ++i) q11[(i * i) % 11] = true;
  }
};

const QRTables& qr() {
  static const QRTables t;
  return t;
}

// Binary form n^d f(m/n) with integer coefficients, d even; square classes unchanged.
struct IntForm {
  int d = 0;
  std::vector<Integer> c;  // c[k] multiplies m^k n^(d-k)
  std::vector<uint64_t> c64;
  std::vector<long> cm;

  explicit IntForm(const QPoly& f) {
    if (f.is_zero()) throw MathError("search: zero polynomial");
    int deg = f.degree();
    d = deg + (deg % 2);
    Integer l = 1;
    for (int k = 0; k <= deg; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.coeff(k).get_den().get_mpz_t());
    c.assign(d + 1, Integer(0));
    for (int k = 0; k <= deg; ++k) {
      Rational v = f.coeff(k) * l * l;
      c[k] = v.get_num();
    }
    for (auto& x : c) {
      Integer r;
      mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), 64);
      c64.push_back(static_cast<uint64_t>(mpz_get_ui(r.get_mpz_t())));
      cm.push_back(static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), kMod)));
    }
  }

  bool infinity_square() const { return mpz_perfect_square_p(c[d].get_mpz_t()) != 0; }

  // Cheap necessary condition; mp and np are powers m^k, n^k reduced mod 2^64 and mod kMod.
  bool modular_pass(const uint64_t* m64, const uint64_t* n64, const long* mm, const long* nm) const {
    uint64_t v = 0;
    for (int k = 0; k <= d; ++k) v += c64[k] * m64[k] * n64[d - k];
    if (!qr().q64[v & 63]) return false;
    long w = 0;
    for (int k = 0; k <= d; ++k) w = (w + cm[k] * ((mm[k] * nm[d - k]) % kMod)) % kMod;
    auto& t = qr();
    return t.q63[w % 63] && t.q65[w % 65] && t.q11[w % 11];
  }

  bool exact_square(long m, long n) const {
    Integer v = c[d], nn = 1, M = m, N = n;
    for (int k = d - 1; k >= 0; --k) {
      nn *= N;
      v = v * M + c[k] * nn;
    }
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
  }
};

// Scan the box for t with every form a square. Deterministic partition: worker w takes n = 1 + w, 1 + w + W, ...
std::vector<TValue> scan_box(const std::vector<IntForm>& forms, long N, int workers) {
  if (workers < 1) workers = 1;
  std::vector<std::vector<TValue>> parts(workers);
  int maxd = 0;
  for (auto& f : forms) maxd = std::max(maxd, f.d);
  auto job = [&](int w) {
    auto& out = parts[w];
    if (w == 0) {
      bool ok = true;
      for (auto& f : forms) ok = ok && f.infinity_square();
      if (ok) out.push_back(TValue::infinity());
    }
    std::vector<uint64_t> n64(maxd + 1), m64(maxd + 1);
    std::vector<long> nm(maxd + 1), mm(maxd + 1);
    for (long n = 1 + w; n <= N; n += workers) {
      n64[0] = 1;
      nm[0] = 1;
      for (int k = 1; k <= maxd; ++k) {
        n64[k] = n64[k - 1] * static_cast<uint64_t>(n);
        nm[k] = (nm[k - 1] * n) % kMod;
      }
      for (long m = -N; m <= N; ++m) {
        if (std::gcd(m, n) != 1) continue;
        m64[0] = 1;
        mm[0] = 1;
        long mr = ((m % kMod) + kMod) % kMod;
        for (int k = 1; k <= maxd; ++k) {
          m64[k] = m64[k - 1] * static_cast<uint64_t>(m);
          mm[k] = (mm[k - 1] * mr) % kMod;
        }
        bool ok = true;
        for (auto& f : forms)
          if (!f.modular_pass(m64.data(), n64.data(), mm.data(), nm.data())) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (auto& f : forms)
          if (!f.exact_square(m, n)) {
            ok = false;
            break;
          }
        if (ok) out.push_back(TValue::of(Rational(m, n)));
      }
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> th;
    for (int w = 0; w < workers; ++w) th.emplace_back(job, w);
    for (auto& t : th) t.join();
  }
  std::vector<TValue> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(), tvalue_less);
  return all;
}

Rational eval_projective(const QPoly& f, const TValue& t, int d) {
  if (!t.inf) return f.eval(t.t);
  return f.degree() == d ? f.lead() : Rational(0);
}

QuadElem eval_projective(const LPoly& f, const TValue& t) {
  if (!t.inf) return f.eval(QuadElem(t.t));
  return f.lead();
}

}  // namespace

std::vector<FoundPoint> simultaneous_squares(const std::vector<QPoly>& polys, const SearchOptions& opt) {
  HeightBound hb(opt.height);
  std::vector<IntForm> forms;
  for (auto& p : polys) forms.emplace_back(p);
  std::vector<FoundPoint> out;
  for (auto& t : scan_box(forms, hb.N, opt.workers)) {
    FoundPoint fp;
    fp.t = t;
    bool ok = true;
    for (size_t i = 0; i < polys.size(); ++i) {
      auto r = rational_sqrt(eval_projective(polys[i], t, forms[i].d));
      if (!r) {
        ok = false;
        break;
      }
      fp.witnesses.emplace_back(*r);
    }
    if (!ok) throw MathError("search: witness failed exact re-check at t = " + t.str());
    fp.provenance = "rational system";
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<FoundPoint> rational_points_biquartic(const BiquarticModel& model, const SearchOptions& opt) {
  auto pts = simultaneous_squares({model.p1, model.p2}, opt);
  for (auto& p : pts) p.provenance = "biquartic";
  return pts;
}

bool verify_quotient_point(const CoveringCase& cc, const FoundPoint& P) {
  if (P.witnesses.size() != 1 || P.s3 == 0 || P.s4 == 0) return false;
  LPoly f = (P.s3 > 0 ? cc.f3.plus : cc.f3.minus) * (P.s4 > 0 ? cc.f4.plus : cc.f4.minus);
  const QuadElem& z = P.witnesses[0];
  return QuadElem(P.delta) * z * z == eval_projective(f, P.t);
}

std::vector<HSearchResult> points_on_H_over_L(const CoveringCase& cc, const std::vector<HCase>& cases,
                                              const SearchOptions& opt) {
  HeightBound hb(opt.height);
  std::vector<HSearchResult> out;
  // Norm prefilter: N(p3s p4s)(t) is p3(t) p4(t) with rational factors dropped; over Q it is delta p3s p4s.
  std::map<std::vector<Integer>, std::vector<TValue>> cache;
  auto scan = [&](const QPoly& g) -> const std::vector<TValue>& {
    IntForm form(g);
    auto it = cache.find(form.c);
    if (it != cache.end()) return it->second;
    return cache.emplace(form.c, scan_box({form}, hb.N, opt.workers)).first->second;
  };
  for (auto& hc : cases) {
    LPoly a = hc.s3 > 0 ? cc.f3.plus : cc.f3.minus;
    LPoly b = hc.s4 > 0 ? cc.f4.plus : cc.f4.minus;
    LPoly f = a * b;
    QPoly g;
    if (!cc.field) {
      g = to_qpoly(f).scaled(hc.delta);
    } else {
      g = QPoly({Rational(1)});
      if (cc.f3.field) g = g * to_qpoly(cc.f3.plus * cc.f3.minus);
      if (cc.f4.field) g = g * to_qpoly(cc.f4.plus * cc.f4.minus);
    }
    HSearchResult res;
    res.hcase = hc;
    for (auto& t : scan(g)) {
      QuadElem v = eval_projective(f, t) / QuadElem(hc.delta);
      auto z = sqrt_in_quadfield(cc.field ? v + QuadElem(Rational(0), Rational(0), cc.field) : v);
      if (!z) continue;
      FoundPoint fp;
      fp.t = t;
      fp.witnesses.push_back(*z);
      fp.delta = hc.delta;
      fp.s3 = hc.s3;
      fp.s4 = hc.s4;
      fp.provenance = "H(" + hc.delta.get_str() + "," + (hc.s3 > 0 ? "+" : "-") + (hc.s4 > 0 ? "+" : "-") + ")";
      if (!verify_quotient_point(cc, fp)) throw MathError("search: quotient witness failed re-check");
      res.points.push_back(std::move(fp));
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::optional<Coords> pullback_to_C(const DiagonalGenus5& C, const TValue& t) {
  auto X = C.from_biquartic(t);
  if (!X) return std::nullopt;
  if (!C.on_curve(*X)) throw MathError("pullback: model point off the curve");
  Coords orig = C.to_original(*X);
  if (!C.on_original(orig)) throw MathError("pullback: point off the original model");
  return orbit_representative(orig);
}

}  // namespace g5rp
