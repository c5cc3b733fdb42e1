//! Published reference values, shared by the case registry and the tests.

/// Dam break star depth ratios `(z_L, z_R)`.
pub const DAMBREAK_Z_L: f64 = 0.731428410320821;
pub const DAMBREAK_Z_R: f64 = 1.4177231168358784;

/// Dam break extreme speeds of the exact solution.
pub const DAMBREAK_EXACT_S_L: f64 = -0.44328320518603004;
pub const DAMBREAK_EXACT_S_R: f64 = 0.43554139386439333;

/// Dam break speed estimates from left, right and averaged states.
pub const DAMBREAK_ESTIMATE_S_L: f64 = -0.44328320518603004;
pub const DAMBREAK_ESTIMATE_S_R: f64 = 0.44328320518603004;
/// Right estimate when the left state is left out.
pub const DAMBREAK_ONE_SIDED_S_R: f64 = 0.38399218742052554;

/// Single 1-shock of depth ratio 1.5 from the dam-break left state.
pub const SINGLE_SHOCK_Z: f64 = 1.5;
pub const SINGLE_SHOCK_U_R: f64 = -0.22169799277395363;
pub const SINGLE_SHOCK_P11_R: f64 = 0.016616666666666658;
pub const SINGLE_SHOCK_SPEED: f64 = 0.6650939783218609;

/// The same shock seen in the frame where it is at rest.
pub const STATIONARY_SHOCK_U_L: f64 = 0.6650939783218609;
pub const STATIONARY_SHOCK_U_R: f64 = 0.44339598554790727;

/// Right `P11` of the single-contact table as printed.
pub const CONTACT_P11_R: f64 = 0.014735;
/// Right `P11` for which the contact table has equal total pressure.
pub const CONTACT_BALANCED_P11_R: f64 = 0.14735;
