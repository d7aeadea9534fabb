// Shared solution chain for the field-level test files; solved once per
// binary at the order the production checks run at.
#pragma once

#include "ringflow/suite.hpp"

namespace testutil {

inline const ringflow::Solutions& chain20() {
    static const ringflow::Solutions s = ringflow::solve_chain(20);
    return s;
}

}  // namespace testutil
