#include "schottky/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/LU>

#include "schottky/kernels.hpp"
#include "schottky/rng.hpp"

namespace schottky {

namespace {

constexpr int kBlock = 256;

struct Neumaier {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double total() const { return s + c; }
};

double tail_term(int k, int g, int order, double lambda, double y_norm, double r_norm) {
    const double shell = std::pow(2.0 * k + 5.0, g);
    const double dfac = order == 0 ? 1.0 : std::pow(2.0 * kPi * (k + 1.0), order);
    const double gap = std::max(0.0, k - r_norm);
    return shell * dfac * std::exp(kPi * y_norm * r_norm - kPi * lambda * gap * gap);
}

// Enumerates v = n + a/2 with ||v||_2 <= N in lexicographic n-order, pruning
// each axis to the admissible interval. flush() is called on full blocks and
// once at the end; coordinates are staged point-major (AoS).
class LatticeSweep {
  public:
    LatticeSweep(int g, const VectorXi& a, int radius) : g_(g), radius2_(double(radius) * radius) {
        half_.resize(g);
        for (int j = 0; j < g; ++j) half_[j] = 0.5 * a[j];
        stage_.resize(static_cast<size_t>(g) * kBlock);
        cur_.resize(g);
    }

    template <typename Flush>
    void run(Flush&& flush) {
        walk(0, 0.0, flush);
        if (count_ > 0) {
            flush(stage_.data(), count_);
            count_ = 0;
        }
    }

  private:
    template <typename Flush>
    void walk(int dim, double partial, Flush& flush) {
        const double rem = radius2_ - partial;
        if (rem < -1e-9) return;
        const double r = std::sqrt(std::max(0.0, rem));
        const int lo = static_cast<int>(std::ceil(-r - half_[dim] - 1e-12));
        const int hi = static_cast<int>(std::floor(r - half_[dim] + 1e-12));
        for (int n = lo; n <= hi; ++n) {
            const double v = n + half_[dim];
            const double p2 = partial + v * v;
            if (p2 > radius2_ + 1e-9) continue;
            cur_[dim] = v;
            if (dim == g_ - 1) {
                double* dst = stage_.data() + static_cast<size_t>(count_) * g_;
                for (int j = 0; j < g_; ++j) dst[j] = cur_[j];
                if (++count_ == kBlock) {
                    flush(stage_.data(), count_);
                    count_ = 0;
                }
            } else {
                walk(dim + 1, p2, flush);
            }
        }
    }

    int g_;
    double radius2_;
    std::vector<double> half_;
    std::vector<double> stage_;
    std::vector<double> cur_;
    int count_ = 0;
};

// Shared per-block machinery: transpose the staged points to SoA and run the
// active quad_phases kernel.
struct PhaseBlock {
    std::vector<double> soa, P, E;

    void compute(int g, const double* stage, int m, const double* qr, const double* qi,
                 const double* lr, const double* li) {
        soa.assign(static_cast<size_t>(g) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < g; ++j) soa[static_cast<size_t>(j) * m + i] = stage[i * g + j];
        P.assign(m, 0.0);
        E.assign(m, 0.0);
        kernels::active().quad_phases(g, m, soa.data(), qr, qi, lr, li, P.data(), E.data());
    }
};

VectorXd round_vec(const VectorXd& x) {
    VectorXd r(x.size());
    for (int i = 0; i < x.size(); ++i) r[i] = std::round(x[i]);
    return r;
}

}  // namespace

const std::vector<std::array<int, 3>>& third_index_table(int g) {
    static std::map<int, std::vector<std::array<int, 3>>> cache;
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    std::vector<std::array<int, 3>> t;
    for (int j = 0; j < g; ++j)
        for (int k = j; k < g; ++k)
            for (int l = k; l < g; ++l) t.push_back({j, k, l});
    return cache.emplace(g, std::move(t)).first->second;
}

cplx ThetaJetRaw::third_at(int j, int k, int l) const {
    int s[3] = {j, k, l};
    std::sort(s, s + 3);
    const auto& table = third_index_table(g);
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i][0] == s[0] && table[i][1] == s[1] && table[i][2] == s[2])
            return third[i];
    throw BadInput("third-derivative index out of range");
}

int truncation_radius_shifted(double lambda_min, int g, double eps, int deriv_order, double y_norm,
                              double r_norm, int max_radius) {
    for (int n = 1; n <= max_radius; ++n) {
        if (n < r_norm) continue;
        double tail = 0.0;
        bool ok = false;
        for (int k = n;; ++k) {
            const double t = tail_term(k, g, deriv_order, lambda_min, y_norm, r_norm);
            tail += t;
            if (tail > eps) break;
            if (t < eps * 1e-6 && k > r_norm + 2) {
                ok = true;
                break;
            }
        }
        if (ok && tail <= eps) return n;
    }
    throw RadiusCapExceeded("tail bound not met at max_radius = " + std::to_string(max_radius) +
                            " (lambda_min = " + std::to_string(lambda_min) + ")");
}

int truncation_radius(const SiegelPoint& omega, const VectorXi& a, double eps, int deriv_order,
                      const ThetaSettings& s) {
    (void)a;  // the shell majorant already covers every half-integer offset
    if (eps <= 0.0) throw BadInput("eps must be positive");
    return truncation_radius_shifted(omega.lambda_min(), omega.genus(), eps, deriv_order, 0.0, 0.0,
                                     s.max_radius);
}

cplx theta(const ThetaCharacteristic& xi, const VectorXcd& z, const SiegelPoint& omega,
           const ThetaSettings& s) {
    const int g = omega.genus();
    if (xi.genus() != g) throw BadInput("characteristic genus mismatch");
    if (z.size() != g) throw BadInput("z dimension mismatch");

    const MatrixXd X = omega.real_part();
    const MatrixXd Y = omega.imag_part();
    Eigen::LDLT<MatrixXd> Yfac(Y);

    VectorXcd zr = z;
    cplx log_pre = 0.0;  // pi*i times the reduction phase
    bool reduced = false;
    auto reduce = [&]() {
        const VectorXd p = round_vec(Yfac.solve(zr.imag()));
        const VectorXcd shift = omega.omega() * p.cast<cplx>();
        const VectorXd q = round_vec((zr - shift).real());
        const VectorXcd znew = zr - shift - q.cast<cplx>();
        const cplx pOp = (p.cast<cplx>().transpose() * omega.omega() * p.cast<cplx>())(0);
        const cplx pz = p.cast<cplx>().dot(znew);  // real p: plain inner product
        const double aq = xi.a.cast<double>().dot(q);
        const double bp = xi.b.cast<double>().dot(p);
        log_pre += cplx(0.0, kPi) * (-pOp - 2.0 * pz + cplx(aq - bp));
        zr = znew;
        reduced = true;
    };

    if (z.cwiseAbs().maxCoeff() > s.eval_ball) reduce();

    auto radius_for = [&]() {
        const VectorXd y = zr.imag();
        const VectorXd r = Yfac.solve(y);
        return truncation_radius_shifted(omega.lambda_min(), g, 0.5 * s.eps, 0, y.norm(), r.norm(),
                                         s.max_radius);
    };

    int N;
    try {
        N = radius_for();
    } catch (const RadiusCapExceeded&) {
        if (reduced) throw;
        reduce();
        N = radius_for();
    }

    std::vector<double> qr(g * g), qi(g * g), lr(g), li(g);
    for (int j = 0; j < g; ++j) {
        for (int k = 0; k < g; ++k) {
            qr[j * g + k] = -kPi * Y(j, k);
            qi[j * g + k] = kPi * X(j, k);
        }
        lr[j] = -2.0 * kPi * zr.imag()[j];
        li[j] = 2.0 * kPi * zr.real()[j] + kPi * xi.b[j];
    }

    Neumaier sum_re, sum_im;
    PhaseBlock block;
    LatticeSweep sweep(g, xi.a, N);
    sweep.run([&](const double* stage, int m) {
        block.compute(g, stage, m, qr.data(), qi.data(), lr.data(), li.data());
        for (int i = 0; i < m; ++i) {
            const double w = std::exp(block.P[i]);
            sum_re.add(w * std::cos(block.E[i]));
            sum_im.add(w * std::sin(block.E[i]));
        }
    });

    return std::exp(log_pre) * cplx(sum_re.total(), sum_im.total());
}

ThetaJetRaw theta_jet(const ThetaCharacteristic& xi, const SiegelPoint& omega,
                      const ThetaSettings& s) {
    const int g = omega.genus();
    if (xi.genus() != g) throw BadInput("characteristic genus mismatch");

    const int N = truncation_radius_shifted(omega.lambda_min(), g, 0.5 * s.eps, 3, 0.0, 0.0,
                                            s.max_radius);

    std::vector<std::array<int, 2>> pairs;
    for (int j = 0; j < g; ++j)
        for (int k = j; k < g; ++k) pairs.push_back({j, k});
    const auto& triples = third_index_table(g);

    const int nm = 1 + g + static_cast<int>(pairs.size()) + static_cast<int>(triples.size());
    const int nm_pad = (nm + 3) & ~3;

    const MatrixXd X = omega.real_part();
    const MatrixXd Y = omega.imag_part();
    std::vector<double> qr(g * g), qi(g * g), lr(g, 0.0), li(g);
    for (int j = 0; j < g; ++j) {
        for (int k = 0; k < g; ++k) {
            qr[j * g + k] = -kPi * Y(j, k);
            qi[j * g + k] = kPi * X(j, k);
        }
        li[j] = kPi * xi.b[j];
    }

    std::vector<Neumaier> acc_re(nm), acc_im(nm);
    std::vector<double> blk_re(nm_pad), blk_im(nm_pad), mono(nm_pad, 0.0);

    PhaseBlock block;
    LatticeSweep sweep(g, xi.a, N);
    sweep.run([&](const double* stage, int m) {
        block.compute(g, stage, m, qr.data(), qi.data(), lr.data(), li.data());
        std::fill(blk_re.begin(), blk_re.end(), 0.0);
        std::fill(blk_im.begin(), blk_im.end(), 0.0);
        for (int i = 0; i < m; ++i) {
            const double* v = stage + static_cast<size_t>(i) * g;
            const double w = std::exp(block.P[i]);
            const double tr = w * std::cos(block.E[i]);
            const double ti = w * std::sin(block.E[i]);
            mono[0] = 1.0;
            for (int j = 0; j < g; ++j) mono[1 + j] = v[j];
            int c = 1 + g;
            for (const auto& p : pairs) mono[c++] = v[p[0]] * v[p[1]];
            for (const auto& t : triples) mono[c++] = v[t[0]] * v[t[1]] * v[t[2]];
            kernels::active().jet_accumulate(nm_pad, mono.data(), tr, ti, blk_re.data(),
                                             blk_im.data());
        }
        for (int c = 0; c < nm; ++c) {
            acc_re[c].add(blk_re[c]);
            acc_im[c].add(blk_im[c]);
        }
    });

    const cplx two_pi_i(0.0, 2.0 * kPi);
    ThetaJetRaw jet;
    jet.g = g;
    jet.value = cplx(acc_re[0].total(), acc_im[0].total());
    jet.gradient.resize(g);
    for (int j = 0; j < g; ++j)
        jet.gradient[j] = two_pi_i * cplx(acc_re[1 + j].total(), acc_im[1 + j].total());
    jet.hessian = MatrixXcd::Zero(g, g);
    {
        const cplx f2 = two_pi_i * two_pi_i;
        int c = 1 + g;
        for (const auto& p : pairs) {
            const cplx h = f2 * cplx(acc_re[c].total(), acc_im[c].total());
            jet.hessian(p[0], p[1]) = h;
            jet.hessian(p[1], p[0]) = h;
            ++c;
        }
        const cplx f3 = f2 * two_pi_i;
        jet.third.resize(triples.size());
        for (size_t t = 0; t < triples.size(); ++t)
            jet.third[t] = f3 * cplx(acc_re[c + t].total(), acc_im[c + t].total());
    }
    return jet;
}

TransformReport check_transformation(const ThetaCharacteristic& xi, const SymplecticInt& gamma,
                                     const SiegelPoint& omega, int sample_count,
                                     std::uint64_t seed, const ThetaSettings& s) {
    if (!in_gamma_4_8(gamma))
        throw CharacteristicMoved("transformation law is implemented only for Gamma(4,8)");
    const int g = omega.genus();
    if (xi.genus() != g || gamma.g != g) throw BadInput("genus mismatch");
    if (sample_count < 1) throw BadInput("sample_count must be positive");

    const MatrixXcd cd = cocycle_cd(gamma, omega);
    const SiegelPoint omega_hat = sp_action_omega(gamma, omega);
    const MatrixXcd cd_inv = cd.inverse();
    const MatrixXcd q_form = cd_inv * gamma.C.cast<double>().cast<cplx>();
    const cplx det_cd = cd.determinant();

    Rng rng(seed);
    std::vector<cplx> ratios;
    for (int i = 0; i < sample_count; ++i) {
        VectorXcd z(g);
        for (int j = 0; j < g; ++j) {
            const double re = rng.uniform(-0.4, 0.4);
            const double im = rng.uniform(-0.4, 0.4);
            z[j] = cplx(re, im);
        }
        const cplx den_theta = theta(xi, z, omega, s);
        if (std::abs(den_theta) < 1e-13) continue;
        const cplx q = (z.transpose() * q_form * z)(0);
        const VectorXcd z_hat = cd_inv.transpose() * z;
        const cplx num = theta(xi, z_hat, omega_hat, s);
        ratios.push_back(num / (std::exp(cplx(0.0, kPi) * q) * den_theta));
    }
    if (ratios.empty())
        throw DegenerateSample("all sampled theta values below 1e-13; retry with another seed");

    cplx mean = 0.0;
    for (const cplx& r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double max_dev = 0.0;
    for (const cplx& r : ratios) max_dev = std::max(max_dev, std::abs(r - mean));

    TransformReport rep;
    rep.samples = static_cast<int>(ratios.size());
    rep.mean_ratio = mean;
    rep.max_dev_from_mean = max_dev;
    rep.det_cd = det_cd;
    rep.det_residual = std::abs(mean * mean - det_cd);
    return rep;
}

}  // namespace schottky
