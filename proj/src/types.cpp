#include "gltlab/types.hpp"

namespace gltlab {

void ensure_finite(const CMatrix& a, const std::string& what) {
    if (!a.allFinite()) throw Error(what + ": matrix has non-finite entries");
}

}  // namespace gltlab
