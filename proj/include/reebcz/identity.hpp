#pragma once

#include <string>

#include "reebcz/point.hpp"

namespace reebcz {

// Pass semantics of a numerical check. Most identities bound a residual
// from above; the contact condition bounds a volume from below.
enum class CheckMode { residual_below, magnitude_above };

struct IdentityCheck {
    std::string name;
    PointC3 point;
    double residual  = 0.0;
    double threshold = 0.0;
    CheckMode mode   = CheckMode::residual_below;
    bool pass        = false;
    bool report_only = false;
};

inline IdentityCheck make_check(std::string name, const PointC3& point, double residual,
                                double threshold, CheckMode mode = CheckMode::residual_below,
                                bool report_only = false) {
    IdentityCheck c;
    c.name        = std::move(name);
    c.point       = point;
    c.residual    = residual;
    c.threshold   = threshold;
    c.mode        = mode;
    c.report_only = report_only;
    c.pass = mode == CheckMode::residual_below ? residual < threshold : residual > threshold;
    return c;
}

} // namespace reebcz
