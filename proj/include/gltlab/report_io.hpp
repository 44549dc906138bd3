#pragma once
//
// Project     : gltlab
// Module      : report_io
// Description : byte-stable CSV emission for estimate and report tables
//

#include "gltlab/acs.hpp"
#include "gltlab/clustering.hpp"
#include "gltlab/distribution.hpp"
#include "gltlab/precond.hpp"

#include <iosfwd>
#include <string>

namespace gltlab {

// 17 significant digits, '.' decimal separator, no locale. Identical inputs
// produce identical bytes.
std::string format_float(double v);

// header: kind,n,delta,value   (absent cells emit no row)
void write_csv(const SeminormEstimate& e, std::ostream& os);

// header: n,eps,count,count_over_n,frob2,frob2_over_n
void write_csv(const ClusterReport& r, std::ostream& os);

// header: n,F,lhs,rhs,residual
void write_csv(const DistributionReport& r, std::ostream& os);

}  // namespace gltlab
