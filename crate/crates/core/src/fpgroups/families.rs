//! Builders for the fundamental-group presentations of the surgered
//! pinwheel families on `CP2 # k CP2bar`, `k` in {2, 3, 4, 7}. The surgery
//! parameter `n` raises one designated commutator relation to its `n`-th
//! power; for `k` in {2, 4} an undetermined conjugation exponent `kappa`
//! enters through the gluing `b2 = y0^2 xi^kappa`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::word::{Presentation, Word};

/// Commutator bracket convention. The triviality results hold under either,
/// which the verification suite checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CommutatorConvention {
    /// `[u, v] = u v u^-1 v^-1`
    #[default]
    UvInverse,
    /// `[u, v] = u^-1 v^-1 u v`
    InverseUv,
}

impl CommutatorConvention {
    pub fn bracket(self, u: &Word, v: &Word) -> Word {
        match self {
            CommutatorConvention::UvInverse => {
                u.concat(v).concat(&u.inverse()).concat(&v.inverse())
            }
            CommutatorConvention::InverseUv => {
                u.inverse().concat(&v.inverse()).concat(u).concat(v)
            }
        }
    }
}

/// Whether the abbreviations `xi` (and its conjugate `eta`) are expanded
/// into the relators or added as generators with defining relations. The
/// two modes present isomorphic groups and must agree on every verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum XiMode {
    #[default]
    Expanded,
    Generators,
}

/// Family selector: the blown-up-count `k`, the surgery power `n >= 1`, and
/// the conjugation exponent `kappa` (required for `k` in {2, 4}).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyParams {
    pub k: u32,
    pub n: i64,
    pub kappa: Option<i64>,
}

impl FamilyParams {
    pub fn new(k: u32, n: i64) -> Self {
        FamilyParams { k, n, kappa: None }
    }

    pub fn with_kappa(k: u32, n: i64, kappa: i64) -> Self {
        FamilyParams { k, n, kappa: Some(kappa) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyBuildError {
    UnsupportedK(u32),
    BadN(i64),
    MissingKappa(u32),
}

impl fmt::Display for FamilyBuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyBuildError::UnsupportedK(k) => write!(f, "no presentation family for k = {k}"),
            FamilyBuildError::BadN(n) => write!(f, "surgery parameter must satisfy n >= 1, got {n}"),
            FamilyBuildError::MissingKappa(k) => {
                write!(f, "k = {k} needs the conjugation exponent kappa")
            }
        }
    }
}

struct Builder {
    names: Vec<String>,
    relators: Vec<Word>,
    convention: CommutatorConvention,
}

impl Builder {
    fn new(names: &[&str], convention: CommutatorConvention) -> Builder {
        Builder {
            names: names.iter().map(|s| s.to_string()).collect(),
            relators: Vec::new(),
            convention,
        }
    }

    fn gen(&self, name: &str) -> Word {
        let idx = self
            .names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("builder bug: unknown generator {name}"));
        Word::generator(idx)
    }

    fn comm(&self, u: &Word, v: &Word) -> Word {
        self.convention.bracket(u, v)
    }

    /// Relator for `lhs = rhs`.
    fn equation(&mut self, lhs: &Word, rhs: &Word) {
        self.relators.push(lhs.inverse().concat(rhs));
    }

    /// Relator for `[u, v] = 1`, skipped when it freely reduces away.
    fn commuting(&mut self, u: &Word, v: &Word) {
        let w = self.comm(u, v);
        if !w.is_empty() {
            self.relators.push(w);
        }
    }

    fn finish(self) -> Presentation {
        Presentation::new(self.names, self.relators)
    }
}

/// `xi = y0 [x0, y0] y0^-1` with `x0` identified with `a2` across the
/// closing gluing.
fn xi_word(b: &Builder) -> Word {
    let y0 = b.gen("y0");
    let a2 = b.gen("a2");
    y0.concat(&b.comm(&a2, &y0)).concat(&y0.inverse())
}

/// Builds the family presentation with the default conventions.
pub fn build_family_presentation(params: FamilyParams) -> Result<Presentation, FamilyBuildError> {
    build_family_presentation_with(params, CommutatorConvention::default(), XiMode::default())
}

/// Builds the family presentation under an explicit commutator convention
/// and `xi`/`eta` handling mode.
pub fn build_family_presentation_with(
    params: FamilyParams,
    convention: CommutatorConvention,
    xi_mode: XiMode,
) -> Result<Presentation, FamilyBuildError> {
    if params.n < 1 {
        return Err(FamilyBuildError::BadN(params.n));
    }
    match params.k {
        3 => Ok(build_k3(params.n, convention)),
        2 | 4 => {
            let kappa = params.kappa.ok_or(FamilyBuildError::MissingKappa(params.k))?;
            Ok(build_k2_k4(params.k, params.n, kappa, convention, xi_mode))
        }
        7 => Ok(build_k7(params.n, convention)),
        k => Err(FamilyBuildError::UnsupportedK(k)),
    }
}

/// Three traded-and-surgered components in a cycle: for each index i mod 3,
/// `[a_i, b_i] = 1`, `[a_(i-1), a_i] = 1`, `[b_(i-1), a_i] = 1`,
/// `a_(i-1) = [b_(i-1)^-1, b_i^-1]`, `b_(i-1) = [b_i, a_(i-1)^-1]`,
/// with the i = 2 instance of the last relation raised to the n-th power.
fn build_k3(n: i64, convention: CommutatorConvention) -> Presentation {
    let mut b = Builder::new(&["a0", "a1", "a2", "b0", "b1", "b2"], convention);
    for i in 0..3usize {
        let prev = (i + 2) % 3;
        let a_i = b.gen(&format!("a{i}"));
        let b_i = b.gen(&format!("b{i}"));
        let a_prev = b.gen(&format!("a{prev}"));
        let b_prev = b.gen(&format!("b{prev}"));
        b.commuting(&a_i, &b_i);
        b.commuting(&a_prev, &a_i);
        b.commuting(&b_prev, &a_i);
        let rhs = b.comm(&b_prev.inverse(), &b_i.inverse());
        b.equation(&a_prev, &rhs);
        let twist = if i == 2 { n } else { 1 };
        let rhs = b.comm(&b_i, &a_prev.inverse()).pow(twist);
        b.equation(&b_prev, &rhs);
    }
    b.finish()
}

/// The three labelled relation blocks of the 3-component structures with an
/// interior component: block `A` (plain), block `Ahat` (with the blowup
/// relation `[a, b] = 1`), and block `I0` (with `[b2, a0] = 1` from the
/// section-class commutation), closed up by `b2 = y0^2 xi^kappa`. For k = 4
/// the `A` block is absent, its indices are glued (`a1 = a0`, `b1 = b0`)
/// through the pushed-through rational ball, and the ball's meridian enters
/// as a generator `mu = [a2, b2]`.
fn build_k2_k4(
    k: u32,
    n: i64,
    kappa: i64,
    convention: CommutatorConvention,
    xi_mode: XiMode,
) -> Presentation {
    let mut names: Vec<&str> = match k {
        2 => alloc::vec!["a0", "a1", "a2", "b0", "b1", "b2", "y0"],
        _ => alloc::vec!["a0", "a2", "b0", "b2", "y0", "mu"],
    };
    if xi_mode == XiMode::Generators {
        names.push("eta");
        names.push("xi");
    }
    let mut b = Builder::new(&names, convention);

    let xi = match xi_mode {
        XiMode::Expanded => xi_word(&b),
        XiMode::Generators => {
            // eta = [x0, y0] (the blowup meridian), xi = y0 eta y0^-1.
            let eta = b.gen("eta");
            let xi = b.gen("xi");
            let y0 = b.gen("y0");
            let a2 = b.gen("a2");
            let comm = b.comm(&a2, &y0);
            b.equation(&eta, &comm);
            let conj = y0.concat(&eta).concat(&y0.inverse());
            b.equation(&xi, &conj);
            xi
        }
    };

    let (a0, b0) = (b.gen("a0"), b.gen("b0"));
    let (a2, b2) = (b.gen("a2"), b.gen("b2"));
    let y0 = b.gen("y0");

    if k == 2 {
        let (a1, b1) = (b.gen("a1"), b.gen("b1"));
        // A block: a1 = [b1^-1, b2^-1], b1 = [b2, a1^-1]^n, [a1, a2] = [b1, a2] = 1.
        let rhs = b.comm(&b1.inverse(), &b2.inverse());
        b.equation(&a1, &rhs);
        let rhs = b.comm(&b2, &a1.inverse()).pow(n);
        b.equation(&b1, &rhs);
        b.commuting(&a1, &a2);
        b.commuting(&b1, &a2);
        // Ahat block: a0 = [b0^-1, b1^-1], b0 = [b1, a0^-1], [a0, a1] = [b0, a1] = [a0, b0] = 1.
        let rhs = b.comm(&b0.inverse(), &b1.inverse());
        b.equation(&a0, &rhs);
        let rhs = b.comm(&b1, &a0.inverse());
        b.equation(&b0, &rhs);
        b.commuting(&a0, &a1);
        b.commuting(&b0, &a1);
        b.commuting(&a0, &b0);
    } else {
        // Ahat(3) block with a1 = a0 and b1 = b0 identified by the
        // push-through: a0 = [b0^-1, b2^-1], b0 = [b2, a0^-1]^n, plus the
        // commutations and the blowup relation.
        let rhs = b.comm(&b0.inverse(), &b2.inverse());
        b.equation(&a0, &rhs);
        let rhs = b.comm(&b2, &a0.inverse()).pow(n);
        b.equation(&b0, &rhs);
        b.commuting(&a0, &a2);
        b.commuting(&b0, &a2);
        b.commuting(&a0, &b0);
    }

    // I0 block: a2 = [b0^-1, y0^-1], y0 = [b0, a2^-1], [a2, a0] = [y0, a0] = 1,
    // and [b2, a0] = 1 since b2 = y0^2 xi^kappa and both commute with a0.
    let rhs = b.comm(&b0.inverse(), &y0.inverse());
    b.equation(&a2, &rhs);
    let rhs = b.comm(&b0, &a2.inverse());
    b.equation(&y0, &rhs);
    b.commuting(&a2, &a0);
    b.commuting(&y0, &a0);
    b.commuting(&b2, &a0);

    // Closing gluing: b2 = y0^2 xi^kappa.
    let rhs = y0.pow(2).concat(&xi.pow(kappa));
    b.equation(&b2, &rhs);

    if k == 4 {
        // Meridian of the pushed-through ball bounds the commutator.
        let mu = b.gen("mu");
        let rhs = b.comm(&a2, &b2);
        b.equation(&mu, &rhs);
    }

    b.finish()
}

/// All component indices glued to a single pair `(a, b)` by the two
/// push-through moves, with the two ball meridians `mu0`, `mu1` bounding the
/// commutator: `a [b^-1, b^-1] = 1` (so `a = 1` freely), `b = [b, a^-1]^n`,
/// `[b, a] = [a, b] = 1`, `mu_i = [a, b]`.
fn build_k7(n: i64, convention: CommutatorConvention) -> Presentation {
    let mut b = Builder::new(&["a", "b", "mu0", "mu1"], convention);
    let (a, bb) = (b.gen("a"), b.gen("b"));
    let rhs = b.comm(&bb.inverse(), &bb.inverse());
    b.equation(&a, &rhs);
    let rhs = b.comm(&bb, &a.inverse()).pow(n);
    b.equation(&bb, &rhs);
    b.commuting(&bb, &a);
    b.commuting(&a, &bb);
    for mu in ["mu0", "mu1"] {
        let mu = b.gen(mu);
        let rhs = b.comm(&a, &bb);
        b.equation(&mu, &rhs);
    }
    b.finish()
}
