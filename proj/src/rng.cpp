#include "pedflow/rng.hpp"

#include <cmath>

namespace pedflow {

namespace {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// A counter-based generator: the output is a keyed bijection of the 128-bit
// counter, so there is no sequential state to share or lock.
struct Philox4x32 {
    uint32_t ctr[4];
    uint32_t key[2];

    static constexpr uint32_t kMul0 = 0xD2511F53u;
    static constexpr uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

    void round() {
        const uint64_t p0 = uint64_t(kMul0) * ctr[0];
        const uint64_t p1 = uint64_t(kMul1) * ctr[2];
        const uint32_t out0 = uint32_t(p1 >> 32) ^ ctr[1] ^ key[0];
        const uint32_t out1 = uint32_t(p1);
        const uint32_t out2 = uint32_t(p0 >> 32) ^ ctr[3] ^ key[1];
        const uint32_t out3 = uint32_t(p0);
        ctr[0] = out0;
        ctr[1] = out1;
        ctr[2] = out2;
        ctr[3] = out3;
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }

    void run10() {
        for (int i = 0; i < 10; ++i) round();
    }
};

}  // namespace

uint64_t random_bits(const RngKey& k) {
    // Key = run seed; counter = (entity, step, phase|ordinal). The phase tag
    // sits in the top bits of the last word, leaving 2^28 ordinals per entity.
    Philox4x32 g;
    g.key[0] = uint32_t(k.seed);
    g.key[1] = uint32_t(k.seed >> 32);
    g.ctr[0] = uint32_t(k.entity);
    g.ctr[1] = uint32_t(k.entity >> 32);
    g.ctr[2] = k.step;
    g.ctr[3] = (uint32_t(k.phase) << 28) | (k.counter & 0x0FFFFFFFu);
    g.run10();
    return (uint64_t(g.ctr[0]) << 32) | g.ctr[1];
}

double uniform(const RngKey& k) {
    return double(random_bits(k) >> 11) * 0x1.0p-53;
}

double inverse_normal_cdf(double p) {
    // Wichura (1988), algorithm AS 241, routine PPND16. Accurate to ~1e-16
    // for p in (0, 1).
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) *
                        r +
                    4.5921953931549871457e4) *
                       r +
                   1.3731693765509461125e4) *
                      r +
                  1.9715909503065514427e3) *
                     r +
                 1.3314166789178437745e2) *
                    r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) *
                        r +
                    2.1213794301586595867e4) *
                       r +
                   5.3941960214247511077e3) *
                      r +
                  6.8718700749205790830e2) *
                     r +
                 4.2313330701600911252e1) *
                    r +
                1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) *
                       r +
                   1.27045825245236838258e0) *
                      r +
                  3.64784832476320460504e0) *
                     r +
                 5.76949722146069140550e0) *
                    r +
                4.63033784615654529590e0) *
                   r +
               1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) *
                       r +
                   1.48103976427480074590e-1) *
                      r +
                  6.89767334985100004550e-1) *
                     r +
                 1.67638483018380384940e0) *
                    r +
                2.05319162663775882187e0) *
                   r +
               1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) *
                       r +
                   2.65321895265761230930e-2) *
                      r +
                  2.96560571828504891230e-1) *
                     r +
                 1.78482653991729133580e0) *
                    r +
                5.46378491116411436990e0) *
                   r +
               6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) *
                       r +
                   7.86869131145613259100e-4) *
                      r +
                  1.48753612908506148525e-2) *
                     r +
                 1.36929880922735805310e-1) *
                    r +
                5.99832206555887937690e-1) *
                   r +
               1.0);
    }
    return (q < 0.0) ? -val : val;
}

double normal(const RngKey& k, double mu, double sigma) {
    // Open-interval uniform keeps the quantile finite at both ends.
    const double u = (double(random_bits(k) >> 11) + 0.5) * 0x1.0p-53;
    return mu + sigma * inverse_normal_cdf(u);
}

}  // namespace pedflow
