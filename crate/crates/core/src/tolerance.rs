//! Every numerical threshold used by the library and the verification suite.

/// Residual bound for identities that hold exactly up to rounding.
pub const IDENTITY: f64 = 1e-12;

/// Tighter bound for purely algebraic identities on small unit-norm operands.
pub const ALGEBRAIC: f64 = 1e-13;

/// Bound used for the spin-one conjugacy minima found by the phase scan.
pub const ZETA_SCAN: f64 = 1e-10;

/// Lower bound a residual must exceed for a "does not hold" claim.
pub const NONEXISTENCE_FLOOR: f64 = 0.1;

/// On-shell relation E^2 = |p|^2 + m^2, relative.
pub const ON_SHELL: f64 = 1e-14;

/// Unit-modulus check for phases.
pub const UNIT_PHASE: f64 = 1e-14;

/// Singular-value style cutoff for rank decisions, relative to the largest pivot.
pub const RANK: f64 = 1e-10;

/// Resample threshold for |p| + pz relative to |p| (the -z axis of the helicity rotation).
pub const MINUS_Z_AXIS: f64 = 1e-6;

/// Sen Gupta mass-shell test p^2 = m1^2 - m2^2, relative to the largest scale involved.
pub const MASS_SHELL: f64 = 1e-10;
