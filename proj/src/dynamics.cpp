#include "toraut/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "toraut/error.hpp"
#include "toraut/foliation.hpp"
#include "toraut/lattice.hpp"
#include "toraut/poly_roots.hpp"
#include "toraut/spectral.hpp"
#include "float_roots.hpp"

namespace toraut {

namespace {

BigComplex eval_int_poly(const IntPoly& p, const BigComplex& z) {
    BigComplex acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z + BigComplex(BigFloat(p.coeff(i)));
    }
    return acc;
}

BigComplex eval_int_poly_derivative(const IntPoly& p, const BigComplex& z) {
    BigComplex acc;
    for (int i = p.degree(); i >= 1; --i) {
        acc = acc * z + BigComplex(BigFloat(i * p.coeff(i)));
    }
    return acc;
}

BigComplex polish_root(const IntPoly& p, BigComplex z) {
    const BigFloat stop{"1e-90"};
    for (int iter = 0; iter < 80; ++iter) {
        BigComplex df = eval_int_poly_derivative(p, z);
        if (df.abs2() == 0) break;
        BigComplex step = eval_int_poly(p, z) / df;
        z -= step;
        if (step.abs2() < stop) break;
    }
    return z;
}

/// Kernel vector of A - lambda I by row echelon with partial pivoting; the
/// first effectively pivot-free column is taken as the free variable.
std::vector<BigComplex> eigenvector_of(const IntMatrix& a, const BigComplex& lambda) {
    const int n = a.rows();
    std::vector<std::vector<BigComplex>> m(n, std::vector<BigComplex>(n));
    BigFloat scale = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i][j] = BigComplex(BigFloat(a.at(i, j)));
            if (i == j) m[i][j] -= lambda;
            if (m[i][j].abs2() > scale) scale = m[i][j].abs2();
        }
    }
    const BigFloat negligible = scale * BigFloat("1e-60");

    std::vector<std::pair<int, int>> pivots;  // (row, column), echelon order
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int best = -1;
        BigFloat best_mag = 0;
        for (int i = row; i < n; ++i) {
            BigFloat mag = m[i][col].abs2();
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best < 0 || best_mag < negligible) continue;  // free column
        std::swap(m[row], m[best]);
        for (int i = row + 1; i < n; ++i) {
            BigComplex f = m[i][col] / m[row][col];
            for (int j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.emplace_back(row, col);
        ++row;
    }

    int free_col = n - 1;
    {
        std::vector<bool> is_pivot(n, false);
        for (const auto& rc : pivots) is_pivot[rc.second] = true;
        for (int c = 0; c < n; ++c) {
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
        }
    }

    std::vector<BigComplex> v(n);
    v[free_col] = BigComplex(BigFloat(1));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [r, c] = *it;
        if (c == free_col) continue;
        BigComplex s;
        for (int j = c + 1; j < n; ++j) s += m[r][j] * v[j];
        v[c] = -s / m[r][c];
    }

    // Unit norm, then rotate the largest component onto the positive reals
    // for a deterministic representative.
    BigFloat norm2 = 0;
    for (const auto& e : v) norm2 += e.abs2();
    BigFloat norm = sqrt(norm2);
    int biggest = 0;
    for (int i = 1; i < n; ++i) {
        if (v[i].abs2() > v[biggest].abs2()) biggest = i;
    }
    BigComplex phase = v[biggest].conj();
    BigFloat mag = sqrt(phase.abs2());
    for (auto& e : v) e = e * phase / BigComplex(mag * norm);
    return v;
}

BigFloat eigen_residual(const IntMatrix& a, const BigComplex& lambda,
                        const std::vector<BigComplex>& v) {
    const int n = a.rows();
    BigFloat r2 = 0;
    for (int i = 0; i < n; ++i) {
        BigComplex s;
        for (int j = 0; j < n; ++j) s += BigComplex(BigFloat(a.at(i, j))) * v[j];
        s -= lambda * v[i];
        r2 += s.abs2();
    }
    return sqrt(r2);
}

}  // namespace

RationalPoint RationalPoint::normalized() const {
    if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
    RationalPoint out;
    out.denominator = denominator;
    out.numerators.reserve(numerators.size());
    for (const Int& num : numerators) {
        Int m = num % denominator;
        if (m < 0) m += denominator;
        out.numerators.push_back(m);
    }
    Int g = out.denominator;
    for (const Int& num : out.numerators) g = gcd(g, num);
    if (g > 1) {
        out.denominator /= g;
        for (Int& num : out.numerators) num /= g;
    }
    out.reduced = true;
    return out;
}

long long period_of(const IntMatrix& a, const RationalPoint& x) {
    if (!a.is_square() || int(x.numerators.size()) != a.rows()) {
        throw std::invalid_argument("point dimension must match the matrix");
    }
    if (!is_ergodic(a)) {
        throw Error(ErrorCode::MayBeNonPeriodic,
                    "non-ergodic automorphism: rational points need not have finite orbits "
                    "detectable by residue iteration");
    }
    RationalPoint p = x.normalized();
    if (p.denominator > 1'000'000) {
        throw Error(ErrorCode::DenominatorTooLarge, "denominator exceeds 10^6");
    }
    const long long q = p.denominator.convert_to<long long>();
    const int n = a.rows();
    std::vector<long long> reduced(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Int m = a.at(i, j) % q;
            if (m < 0) m += q;
            reduced[size_t(i) * n + j] = m.convert_to<long long>();
        }
    }
    std::vector<long long> start(n);
    for (int i = 0; i < n; ++i) start[i] = p.numerators[i].convert_to<long long>();
    std::vector<long long> current = start;
    std::vector<long long> next(n);
    const long long kMaxSteps = 20'000'000;
    for (long long k = 1; k <= kMaxSteps; ++k) {
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += reduced[size_t(i) * n + j] * current[j];
            next[i] = s % q;
        }
        current = next;
        if (current == start) return k;
    }
    throw Error(ErrorCode::BudgetExhausted, "orbit walk exceeded 2e7 steps");
}

std::optional<Int> count_fixed_points(const IntMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("power must be >= 1");
    IntMatrix m = a.pow(unsigned(k)) - IntMatrix::identity(a.rows());
    Int d = abs_int(det(m));
    if (d == 0) return std::nullopt;
    Int product = 1;
    for (const Int& f : smith_normal_form(m).invariant_factors()) product *= f;
    if (product != d) {
        throw std::logic_error("fixed-point determinant disagrees with Smith invariants");
    }
    return d;
}

UnstableFrame unstable_frame(const IntMatrix& a) {
    SpectrumSplit split = spectrum_trichotomy(a);
    if (split.dim_unstable != 2) {
        throw Error(ErrorCode::WrongUnstableDim, "frame construction expects dim W^u = 2");
    }
    const int n = a.rows();

    // Locate the two expanding eigenvalues among the factors.
    std::vector<BigFloat> real_lambdas;
    const IntPoly* complex_factor = nullptr;
    for (const auto& factor : split.factors) {
        if (factor.counts.outside == 0) continue;
        RootIsolation iso = isolate_real_roots(factor.poly);
        int real_outside = 0;
        for (size_t i = 0; i < iso.intervals.size(); ++i) {
            if (iso.circle_sides[i] != CircleSide::Outside) continue;
            ++real_outside;
            auto [lo, hi] = iso.intervals[i];
            refine_root(factor.poly, lo, hi, Rat(Int(1), Int(1) << 170));
            real_lambdas.push_back(to_bigfloat((lo + hi) / 2));
        }
        if (real_outside == 0) complex_factor = &factor.poly;
    }

    UnstableFrame frame;
    if (real_lambdas.size() == 2) {
        frame.kind = UnstableFrame::Kind::RealPair;
        std::sort(real_lambdas.begin(), real_lambdas.end());
        BigFloat worst = 0;
        for (int which = 0; which < 2; ++which) {
            BigComplex lambda{real_lambdas[which], BigFloat(0)};
            auto v = eigenvector_of(a, lambda);
            BigFloat residual = eigen_residual(a, lambda, v);
            if (residual > worst) worst = residual;
            std::vector<double>& out = which == 0 ? frame.gamma1 : frame.gamma2;
            out.resize(n);
            for (int i = 0; i < n; ++i) out[i] = v[i].re.convert_to<double>();
        }
        frame.residual = worst.convert_to<double>();
    } else if (real_lambdas.empty() && complex_factor != nullptr) {
        frame.kind = UnstableFrame::Kind::ComplexPair;
        // Seed from double roots, then polish against the exact factor.
        BigComplex lambda;
        double best_mod = 0;
        for (const auto& root : detail::float_roots(*complex_factor)) {
            double mod = std::abs(root);
            if (root.imag() > 1e-12 && mod > 1.0 + 1e-9 && mod > best_mod) {
                best_mod = mod;
                lambda = BigComplex{BigFloat(root.real()), BigFloat(root.imag())};
            }
        }
        if (best_mod == 0) throw std::logic_error("expanding complex pair not found");
        lambda = polish_root(*complex_factor, lambda);
        auto v = eigenvector_of(a, lambda);
        frame.residual = eigen_residual(a, lambda, v).convert_to<double>();
        frame.gamma1.resize(n);
        frame.gamma2.resize(n);
        BigFloat n1 = 0;
        BigFloat n2 = 0;
        for (int i = 0; i < n; ++i) {
            n1 += v[i].re * v[i].re;
            n2 += v[i].im * v[i].im;
        }
        n1 = sqrt(n1);
        n2 = sqrt(n2);
        for (int i = 0; i < n; ++i) {
            frame.gamma1[i] = (v[i].re / n1).convert_to<double>();
            frame.gamma2[i] = (v[i].im / n2).convert_to<double>();
        }
    } else {
        throw std::logic_error("expanding spectrum is neither a real pair nor a complex pair");
    }
    return frame;
}

DensityScan leaf_density_scan(const IntMatrix& a, int resolution, long long samples,
                              std::uint64_t seed, std::vector<std::vector<double>>* collect) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    const int n = a.rows();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= resolution;
        if (total > (1LL << 26)) {
            throw std::invalid_argument("congruence grid exceeds 2^26 boxes");
        }
    }
    if (samples < total) {
        throw std::invalid_argument("need at least one sample per congruence box");
    }
    UnstableFrame frame = unstable_frame(a);

    std::mt19937_64 rng(seed);
    // Uniform doubles built directly from the generator bits so the sample
    // stream is identical on every platform.
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };

    std::vector<bool> hit(size_t(total), false);
    long long boxes_hit = 0;
    std::vector<double> folded(n);
    for (long long s = 0; s < samples; ++s) {
        double t1 = (unit() * 2.0 - 1.0) * 64.0;
        double t2 = (unit() * 2.0 - 1.0) * 64.0;
        size_t index = 0;
        for (int c = 0; c < n; ++c) {
            double x = t1 * frame.gamma1[c] + t2 * frame.gamma2[c];
            double frac = x - std::floor(x);
            folded[c] = frac;
            int box = int(frac * resolution);
            if (box >= resolution) box = resolution - 1;
            if (box < 0) box = 0;
            index = index * resolution + size_t(box);
        }
        if (collect != nullptr) collect->push_back(folded);
        if (!hit[index]) {
            hit[index] = true;
            ++boxes_hit;
        }
    }

    DensityScan scan;
    scan.coverage = double(boxes_hit) / double(total);
    scan.boxes_hit = boxes_hit;
    scan.total_boxes = total;
    scan.resolution = resolution;
    scan.samples = samples;
    scan.seed = seed;
    return scan;
}

KroneckerResult kronecker_witness(const IntMatrix& a, const std::vector<double>& target,
                                  double eps) {
    const int n = a.rows();
    if (int(target.size()) != n) throw std::invalid_argument("target dimension mismatch");
    if (eps < 1e-3) throw std::invalid_argument("eps below the supported floor 1e-3");

    for (const auto& relation : resonance_relations(a, SpectrumPart::Unstable)) {
        double pairing = 0;
        for (int c = 0; c < n; ++c) pairing += relation[c].convert_to<double>() * target[c];
        if (std::abs(pairing - std::round(pairing)) > eps) {
            KroneckerResult result;
            result.obstructed = true;
            result.obstruction = relation;
            return result;
        }
    }

    UnstableFrame frame = unstable_frame(a);
    const long long kBudget = 80'000'000;
    long long evals = 0;

    auto residual_at = [&](double t1, double t2) {
        double worst = 0;
        for (int c = 0; c < n; ++c) {
            double x = t1 * frame.gamma1[c] + t2 * frame.gamma2[c] - target[c];
            double d = std::abs(x - std::round(x));
            if (d > worst) worst = d;
        }
        return worst;
    };
    auto witness_at = [&](double t1, double t2) {
        KroneckerResult result;
        result.t1 = t1;
        result.t2 = t2;
        result.shift.resize(n);
        double worst = 0;
        for (int c = 0; c < n; ++c) {
            double x = t1 * frame.gamma1[c] + t2 * frame.gamma2[c] - target[c];
            result.shift[c] = std::llround(x);
            double d = std::abs(x - double(result.shift[c]));
            if (d > worst) worst = d;
        }
        result.residual = worst;
        return result;
    };

    double best = 2.0;
    double best_t1 = 0;
    double best_t2 = 0;
    auto consider = [&](double t1, double t2) -> bool {
        if (++evals > kBudget) {
            throw Error(ErrorCode::BudgetExhausted,
                        "no witness within 8e7 grid evaluations at this eps");
        }
        double r = residual_at(t1, t2);
        if (r < best) {
            best = r;
            best_t1 = t1;
            best_t2 = t2;
        }
        return r <= eps;
    };

    const double step = 0.8 * eps;
    for (double range : {16.0, 48.0, 150.0}) {
        const long long m = std::llround(range / step);
        for (long long shell = 0; shell <= m; ++shell) {
            if (shell == 0) {
                if (consider(0.0, 0.0)) return witness_at(0.0, 0.0);
                continue;
            }
            double s = double(shell) * step;
            for (long long i = -shell; i <= shell; ++i) {
                double t = double(i) * step;
                if (consider(t, -s)) return witness_at(t, -s);
                if (consider(t, s)) return witness_at(t, s);
            }
            for (long long j = -shell + 1; j <= shell - 1; ++j) {
                double t = double(j) * step;
                if (consider(-s, t)) return witness_at(-s, t);
                if (consider(s, t)) return witness_at(s, t);
            }
        }
        // Local refinement around the best grid point of this stage.
        double t1 = best_t1;
        double t2 = best_t2;
        double h = step / 2;
        for (int round = 0; round < 24; ++round) {
            bool improved = false;
            const double moves[8][2] = {{-h, -h}, {-h, 0}, {-h, h}, {0, -h},
                                        {0, h},   {h, -h}, {h, 0},  {h, h}};
            for (const auto& mv : moves) {
                double c1 = t1 + mv[0];
                double c2 = t2 + mv[1];
                if (consider(c1, c2)) return witness_at(c1, c2);
                if (residual_at(c1, c2) < residual_at(t1, t2)) {
                    t1 = c1;
                    t2 = c2;
                    improved = true;
                    break;
                }
            }
            if (!improved) h /= 2;
        }
    }
    throw Error(ErrorCode::BudgetExhausted, "no witness within the staged grid search");
}

}  // namespace toraut
