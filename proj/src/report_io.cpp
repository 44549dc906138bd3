#include "gltlab/report_io.hpp"

#include <cstdio>
#include <ostream>

namespace gltlab {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const SeminormEstimate& e, std::ostream& os) {
    os << "kind,n,delta,value\n";
    for (std::size_t i = 0; i < e.dims.size(); ++i) {
        for (std::size_t j = 0; j < e.deltas.size(); ++j) {
            if (!e.table[i][j]) continue;
            os << e.kind << ',' << e.dims[i] << ',' << format_float(e.deltas[j]) << ','
               << format_float(*e.table[i][j]) << '\n';
        }
    }
}

void write_csv(const ClusterReport& r, std::ostream& os) {
    os << "n,eps,count,count_over_n,frob2,frob2_over_n\n";
    for (std::size_t i = 0; i < r.dims.size(); ++i) {
        for (std::size_t j = 0; j < r.eps_grid.size(); ++j) {
            const double frac =
                static_cast<double>(r.counts[i][j]) / static_cast<double>(r.dims[i]);
            os << r.dims[i] << ',' << format_float(r.eps_grid[j]) << ',' << r.counts[i][j] << ','
               << format_float(frac) << ',' << format_float(r.frob2[i]) << ','
               << format_float(r.frob2_over_n[i]) << '\n';
        }
    }
}

void write_csv(const DistributionReport& r, std::ostream& os) {
    os << "n,F,lhs,rhs,residual\n";
    for (std::size_t i = 0; i < r.dims.size(); ++i) {
        for (std::size_t q = 0; q < r.funcs.size(); ++q) {
            os << r.dims[i] << ',' << r.funcs[q].id() << ',' << format_float(r.lhs[i][q]) << ','
               << format_float(r.rhs[q]) << ',' << format_float(r.residual[i][q]) << '\n';
        }
    }
}

}  // namespace gltlab
