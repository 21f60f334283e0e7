#pragma once

namespace tak {

/// Numerical thresholds shared by the whole pipeline. Every field is positive.
struct Tolerances {
    /// Relative zero threshold for Laurent coefficients (fraction of the largest magnitude).
    double zero = 1e-9;
    /// |leading - 1| below this counts as monic.
    double monic = 1e-6;
    /// Relative remainder allowed by exact division.
    double division = 1e-8;
    /// Max-entry residual of wa - bw accepted as a genuine representation.
    double relator = 1e-6;
    /// Coordinate-space distance under which two witnesses are the same representation.
    double dedupe = 1e-6;
    /// |u| below this marks the abelian locus.
    double reducible = 1e-9;
};

}  // namespace tak
