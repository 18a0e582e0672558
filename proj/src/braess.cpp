#include "forktx/braess.hpp"

#include <cmath>
#include <string>

namespace forktx {

namespace {

constexpr double kParadoxTol = 1e-12;

void require_three_leads(const VertexParams& params, const char* who) {
    params.validate();
    if (params.leads() != 3)
        throw DomainError(std::string(who) + ": three leads required");
}

std::vector<double> axis_values(const AxisSpec& axis, const char* name,
                                bool strictly_positive) {
    if (axis.points < 1)
        throw DomainError(std::string("braess_scan: ") + name +
                          " needs at least 1 point");
    if (!(axis.lo <= axis.hi))
        throw DomainError(std::string("braess_scan: ") + name +
                          " range must have lo <= hi");
    if (strictly_positive ? !(axis.lo > 0.0) : !(axis.lo >= 0.0))
        throw DomainError(std::string("braess_scan: ") + name + " out of range");

    if (axis.lo == axis.hi || axis.points == 1) return {axis.lo};
    std::vector<double> values(axis.points);
    const double step = (axis.hi - axis.lo) / (axis.points - 1);
    for (int i = 0; i < axis.points; ++i) values[i] = axis.lo + i * step;
    values.back() = axis.hi;
    return values;
}

}  // namespace

double transmission_quantum(const VertexParams& params) {
    require_three_leads(params, "transmission_quantum");
    const Matrix s = star_vertex(params);
    return 1.0 - std::norm(s(0, 0));
}

double transmission_classical(const VertexParams& params) {
    require_three_leads(params, "transmission_classical");
    const double k1 = params.wavenumbers[0];
    const double kk = params.barrier * params.barrier;
    double d = 0.0;
    for (int j = 1; j < 3; ++j) {
        const double kj = params.wavenumbers[j];
        const double sum = k1 + kj;
        d += 0.5 * 4.0 * k1 * kj / (sum * sum + kk);
    }
    return d;
}

BraessScan braess_scan(const AxisSpec& k2, const AxisSpec& k3,
                       const AxisSpec& barrier) {
    const auto k2s = axis_values(k2, "k2", true);
    const auto k3s = axis_values(k3, "k3", true);
    const auto barriers = axis_values(barrier, "K", false);

    BraessScan scan;
    scan.points.reserve(k2s.size() * k3s.size() * barriers.size());
    std::size_t paradox_count = 0;

    for (double b : barriers) {
        for (double v2 : k2s) {
            for (double v3 : k3s) {
                const VertexParams params{{1.0, v2, v3}, b};
                BraessPoint p;
                p.k2 = v2;
                p.k3 = v3;
                p.barrier = b;
                p.d_quantum = transmission_quantum(params);
                p.d_classical = transmission_classical(params);
                p.paradox = p.d_classical > p.d_quantum + kParadoxTol;
                paradox_count += p.paradox ? 1 : 0;
                scan.points.push_back(p);
            }
        }
    }
    scan.paradox_fraction =
        static_cast<double>(paradox_count) / static_cast<double>(scan.points.size());
    return scan;
}

}  // namespace forktx
