//! Thurston's two-multitwist construction: curve systems with geometric
//! intersection matrices, the Perron-Frobenius value nu of `N N^t`, the
//! affine representation of the two multitwists into PSL(2, R), word
//! classification, and exact stretch factors.
//!
//! Arithmetic lives in `Z[nu][sqrt(nu)]`: products of the generator matrices
//! keep integer polynomials in nu on the diagonal and integer polynomials
//! times sqrt(nu) off it, so every trace is a plain element of Z[nu] and all
//! sign decisions reduce to exact evaluation at the algebraic number nu.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicReal;
use crate::cyclotomic::strip_cyclotomic_factors;
use crate::error::{Error, Result};
use crate::graphspec::Graph;
use crate::intpoly::IntPoly;
use crate::linalg::{apply_poly_to_companion, IntMatrix};
use crate::numfmt::sqrt_bounds;
use crate::sturm::sturm_count;

/// Two multicurves and their geometric intersection matrix: rows indexed by
/// the curves of `A`, columns by the curves of `B`.
#[derive(Clone, Debug)]
pub struct CurveSystem {
    pub names_a: Vec<String>,
    pub names_b: Vec<String>,
    pub matrix: IntMatrix,
}

impl CurveSystem {
    pub fn new(names_a: Vec<String>, names_b: Vec<String>, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != names_a.len() || matrix.cols() != names_b.len() {
            return Err(Error::DegenerateInput(
                "intersection matrix shape does not match curve labels".into(),
            ));
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if matrix[(i, j)] < BigInt::zero() {
                    return Err(Error::DegenerateInput(
                        "intersection numbers must be non-negative".into(),
                    ));
                }
            }
        }
        Ok(CurveSystem {
            names_a,
            names_b,
            matrix,
        })
    }

    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        let names_a = (0..matrix.rows()).map(|i| format!("a{i}")).collect();
        let names_b = (0..matrix.cols()).map(|j| format!("b{j}")).collect();
        CurveSystem::new(names_a, names_b, matrix)
    }

    /// Parses rows of space-separated non-negative integers.
    pub fn parse_matrix_text(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::InputError(format!("bad entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::InputError("ragged matrix rows".into()));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::InputError("empty matrix".into()));
        }
        CurveSystem::from_matrix(IntMatrix::from_rows_i64(&rows))
    }

    pub fn has_zero_row_or_column(&self) -> bool {
        let m = &self.matrix;
        let zero_row = (0..m.rows()).any(|i| (0..m.cols()).all(|j| m[(i, j)].is_zero()));
        let zero_col = (0..m.cols()).any(|j| (0..m.rows()).all(|i| m[(i, j)].is_zero()));
        zero_row || zero_col
    }

    /// The bipartite graph induced by nonzero intersection (one vertex per
    /// curve; multiplicities ignored here, used only for connectivity).
    fn incidence_graph(&self) -> Graph {
        let na = self.matrix.rows();
        let nb = self.matrix.cols();
        let mut edges = Vec::new();
        for i in 0..na {
            for j in 0..nb {
                if !self.matrix[(i, j)].is_zero() {
                    edges.push((i, na + j));
                }
            }
        }
        Graph::new(na + nb, edges).expect("incidence graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        self.incidence_graph().is_connected()
    }
}

/// The standard chain-with-parallel-copies configuration: curves
/// `c_1, ..., c_(g-1)` plus `k` parallel copies of `c_g` against
/// `d_1, ..., d_g`, with `i(c_i, d_i) = i(c_i, d_(i+1)) = 1` for `i < g` and
/// `i(c_g, d_g) = 1`.
pub fn standard_system(g: u32, k: u32) -> Result<CurveSystem> {
    if g < 2 || k < 3 {
        return Err(Error::OutOfRange(format!(
            "standard system needs g >= 2 and k >= 3, got g={g}, k={k}"
        )));
    }
    let g = g as usize;
    let k = k as usize;
    let mut names_a: Vec<String> = (1..g).map(|i| format!("c{i}")).collect();
    for copy in 1..=k {
        names_a.push(format!("c{g}_{copy}"));
    }
    let names_b: Vec<String> = (1..=g).map(|i| format!("d{i}")).collect();
    let mut m = IntMatrix::zeros(g - 1 + k, g);
    for i in 0..g - 1 {
        m[(i, i)] = BigInt::one();
        m[(i, i + 1)] = BigInt::one();
    }
    for copy in 0..k {
        m[(g - 1 + copy, g - 1)] = BigInt::one();
    }
    CurveSystem::new(names_a, names_b, m)
}

/// Configuration graph: one vertex per curve, one edge per intersection
/// point. Entries above 1 would require multiple edges, which a Coxeter
/// graph forbids.
pub fn config_graph(sys: &CurveSystem) -> Result<Graph> {
    let m = &sys.matrix;
    let na = m.rows();
    let mut edges = Vec::new();
    for i in 0..na {
        for j in 0..m.cols() {
            let e = &m[(i, j)];
            if e > &BigInt::one() {
                return Err(Error::NotCoxeter(format!(
                    "i({}, {}) = {e} needs a multi-edge",
                    sys.names_a[i], sys.names_b[j]
                )));
            }
            if e.is_one() {
                edges.push((i, na + j));
            }
        }
    }
    Graph::new(na + m.cols(), edges)
}

/// The spectral data of a curve system: the characteristic polynomial of
/// `N N^t`, the square-free factor vanishing at nu, and nu itself.
#[derive(Clone, Debug)]
pub struct SystemSpectrum {
    pub gram_charpoly: IntPoly,
    /// Monic square-free factor of `gram_charpoly` with nu as a root; the
    /// modulus for all Z[nu] arithmetic.
    pub modulus: IntPoly,
    pub nu: AlgebraicReal,
}

/// Computes nu as the largest eigenvalue of `N N^t` (Perron-Frobenius) with
/// its exact minimal-degree square-free witness factor.
pub fn analyze(sys: &CurveSystem) -> Result<SystemSpectrum> {
    if !sys.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = &sys.matrix;
    let gram = n.mul(&n.transpose());
    let charpoly = gram.charpoly();
    let nu = AlgebraicReal::largest_root(&charpoly)?;
    let mut modulus = None;
    for (factor, _) in charpoly.square_free_decomposition()? {
        if nu.sign_of_poly(&factor) == 0 {
            modulus = Some(factor);
            break;
        }
    }
    let modulus = modulus
        .ok_or_else(|| Error::Inconclusive("no square-free factor vanishes at nu".into()))?;
    Ok(SystemSpectrum {
        gram_charpoly: charpoly,
        modulus,
        nu,
    })
}

/// `nu(sys)`: the largest eigenvalue in magnitude of `N N^t`.
pub fn nu(sys: &CurveSystem) -> Result<AlgebraicReal> {
    Ok(analyze(sys)?.nu)
}

/// Element of the affine group generated by the two multitwist images:
/// semantically the 2x2 matrix
/// `[[d00(nu), d01(nu) sqrt(nu)], [d10(nu) sqrt(nu), d11(nu)]]`
/// with integer polynomials reduced modulo the nu-factor. This entry shape
/// is closed under products and inverses of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement {
    pub d00: IntPoly,
    pub d01: IntPoly,
    pub d10: IntPoly,
    pub d11: IntPoly,
}

impl AffineElement {
    pub fn identity() -> Self {
        AffineElement {
            d00: IntPoly::one(),
            d01: IntPoly::zero(),
            d10: IntPoly::zero(),
            d11: IntPoly::one(),
        }
    }

    /// rho(T_A) = [[1, -sqrt(nu)], [0, 1]].
    pub fn twist_a() -> Self {
        AffineElement {
            d00: IntPoly::one(),
            d01: IntPoly::from_i64(&[-1]),
            d10: IntPoly::zero(),
            d11: IntPoly::one(),
        }
    }

    /// rho(T_B) = [[1, 0], [sqrt(nu), 1]].
    pub fn twist_b() -> Self {
        AffineElement {
            d00: IntPoly::one(),
            d01: IntPoly::zero(),
            d10: IntPoly::one(),
            d11: IntPoly::one(),
        }
    }

    /// Matrix product in `Z[nu][sqrt(nu)]`, reduced modulo the nu-factor.
    pub fn mul(&self, other: &AffineElement, modulus: &IntPoly) -> AffineElement {
        let t = IntPoly::x();
        let red = |p: IntPoly| reduce_mod(&p, modulus);
        AffineElement {
            d00: red(self
                .d00
                .mul(&other.d00)
                .add(&t.mul(&self.d01.mul(&other.d10)))),
            d01: red(self.d00.mul(&other.d01).add(&self.d01.mul(&other.d11))),
            d10: red(self.d10.mul(&other.d00).add(&self.d11.mul(&other.d10))),
            d11: red(t
                .mul(&self.d10.mul(&other.d01))
                .add(&self.d11.mul(&other.d11))),
        }
    }

    /// Inverse under the determinant-one contract: swap the diagonal and
    /// negate the off-diagonal.
    pub fn inverse(&self) -> AffineElement {
        AffineElement {
            d00: self.d11.clone(),
            d01: self.d01.neg(),
            d10: self.d10.neg(),
            d11: self.d00.clone(),
        }
    }

    /// Determinant as an element of Z[nu] (should be 1 at nu).
    pub fn det_poly(&self, modulus: &IntPoly) -> IntPoly {
        let t = IntPoly::x();
        reduce_mod(
            &self
                .d00
                .mul(&self.d11)
                .sub(&t.mul(&self.d01.mul(&self.d10))),
            modulus,
        )
    }

    /// Trace as an element of Z[nu] (the sqrt(nu) parts sit off-diagonal).
    pub fn trace_poly(&self, modulus: &IntPoly) -> IntPoly {
        reduce_mod(&self.d00.add(&self.d11), modulus)
    }
}

/// Remainder of `p` modulo a monic integer polynomial; stays integral.
fn reduce_mod(p: &IntPoly, modulus: &IntPoly) -> IntPoly {
    debug_assert!(modulus.is_monic());
    let dm = modulus.degree();
    let mut r = p.clone();
    while let Some(dr) = r.deg() {
        if dr < dm {
            break;
        }
        let top = r.leading().unwrap().clone();
        let shifted = modulus.mul(&IntPoly::monomial(top, dr - dm));
        r = r.sub(&shifted);
        if r.deg() == Some(dr) {
            // Leading coefficient must have cancelled.
            unreachable!("monic reduction did not lower the degree");
        }
    }
    r
}

/// Generator images of the two multitwists.
pub fn rho_generators() -> (AffineElement, AffineElement) {
    (AffineElement::twist_a(), AffineElement::twist_b())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

/// Parses a word over `A a B b` (lowercase = inverse twist).
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for c in s.chars() {
        match c {
            'A' => out.push(Letter::A),
            'a' => out.push(Letter::AInv),
            'B' => out.push(Letter::B),
            'b' => out.push(Letter::BInv),
            c if c.is_whitespace() => {}
            other => {
                return Err(Error::InputError(format!(
                    "word letters are A a B b, found `{other}`"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::DegenerateInput("empty twist word".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IsotopyClass {
    PseudoAnosov,
    Parabolic,
    Elliptic,
}

/// Classification of a word in the two multitwists, with its exact stretch
/// factor when the image is hyperbolic.
#[derive(Clone, Debug)]
pub struct PAClassification {
    pub tag: IsotopyClass,
    pub stretch: Option<AlgebraicReal>,
    /// Integer polynomial with the stretch factor as a root, produced by
    /// eliminating nu; square-free and cyclotomic-free, but minimality is
    /// not certified.
    pub minpoly_candidate: Option<IntPoly>,
    /// The degree-2 deg(modulus) elimination polynomial before any factor
    /// is stripped: `x^deg(R) R(x + 1/x)` for `R(u) = prod (u - |trace|(nu_i))`.
    pub elimination_poly: Option<IntPoly>,
}

/// Multiplies out a word (leftmost letter acts first) and classifies the
/// image by |trace| against 2, all decisions exact at nu.
pub fn classify_word(sys: &CurveSystem, word: &[Letter]) -> Result<PAClassification> {
    if word.is_empty() {
        return Err(Error::DegenerateInput("empty twist word".into()));
    }
    let spectrum = analyze(sys)?;
    classify_word_with(&spectrum, word)
}

pub fn classify_word_with(spectrum: &SystemSpectrum, word: &[Letter]) -> Result<PAClassification> {
    let modulus = &spectrum.modulus;
    let (a, b) = rho_generators();
    let mut m = AffineElement::identity();
    // Leftmost acts first: the matrix of the composite is the product of
    // the letters' matrices from right to left.
    for letter in word {
        let gen = match letter {
            Letter::A => a.clone(),
            Letter::AInv => a.inverse(),
            Letter::B => b.clone(),
            Letter::BInv => b.inverse(),
        };
        m = gen.mul(&m, modulus);
    }
    let trace = m.trace_poly(modulus);
    let tr_minus_2 = trace.sub(&IntPoly::from_i64(&[2]));
    let tr_plus_2 = trace.add(&IntPoly::from_i64(&[2]));
    let s_minus = spectrum.nu.sign_of_poly(&tr_minus_2);
    let s_plus = spectrum.nu.sign_of_poly(&tr_plus_2);
    if s_minus == 0 || s_plus == 0 {
        return Ok(PAClassification {
            tag: IsotopyClass::Parabolic,
            stretch: None,
            minpoly_candidate: None,
            elimination_poly: None,
        });
    }
    if s_minus < 0 && s_plus > 0 {
        return Ok(PAClassification {
            tag: IsotopyClass::Elliptic,
            stretch: None,
            minpoly_candidate: None,
            elimination_poly: None,
        });
    }
    // Hyperbolic: |trace| > 2. Normalize to the positive trace in the
    // projective group.
    let abs_trace = if s_minus > 0 { trace } else { trace.neg() };
    let (stretch, candidate, elimination) = stretch_from_abs_trace(spectrum, &abs_trace)?;
    Ok(PAClassification {
        tag: IsotopyClass::PseudoAnosov,
        stretch: Some(stretch),
        minpoly_candidate: Some(candidate),
        elimination_poly: Some(elimination),
    })
}

/// Builds the stretch factor lambda with `lambda + 1/lambda = |trace|(nu)`:
/// eliminates nu through the characteristic polynomial of `|trace|` applied
/// to the companion matrix of the modulus, then isolates lambda by interval
/// arithmetic refined until Sturm certifies a single root.
fn stretch_from_abs_trace(
    spectrum: &SystemSpectrum,
    abs_trace: &IntPoly,
) -> Result<(AlgebraicReal, IntPoly, IntPoly)> {
    let modulus = &spectrum.modulus;
    // R(u) = prod over conjugates nu_i of (u - abs_trace(nu_i)).
    let r = apply_poly_to_companion(abs_trace, modulus).charpoly();
    // P(x) = x^deg(R) R(x + 1/x): vanishes at lambda.
    let elimination = {
        let d = r.degree();
        let x2p1 = IntPoly::from_i64(&[1, 0, 1]);
        let mut acc = IntPoly::zero();
        let mut pw = IntPoly::one();
        for j in 0..=d {
            let term = pw
                .scale(&r.coeff(j))
                .mul(&IntPoly::monomial(BigInt::one(), d - j));
            acc = acc.add(&term);
            if j < d {
                pw = pw.mul(&x2p1);
            }
        }
        acc
    };
    let (no_x, _) = elimination.strip_x_powers();
    let sf = no_x.square_free_part()?;
    let (candidate, _) = strip_cyclotomic_factors(&sf)?;
    if candidate.degree() == 0 {
        return Err(Error::Inconclusive(
            "stretch elimination collapsed to a unit".into(),
        ));
    }
    // Interval for lambda = (tau + sqrt(tau^2 - 4)) / 2 with tau = |trace|.
    let mut nu = spectrum.nu.clone();
    let two = BigRational::from(BigInt::from(2));
    let four = BigRational::from(BigInt::from(4));
    let mut bits = 32u32;
    loop {
        let (nlo, nhi) = nu.interval();
        let (tlo, thi) = abs_trace.eval_interval(&nlo, &nhi);
        if tlo > two {
            let disc_lo = &tlo * &tlo - &four;
            let disc_hi = &thi * &thi - &four;
            let (slo, _) = sqrt_bounds(&disc_lo, bits)?;
            let (_, shi) = sqrt_bounds(&disc_hi, bits)?;
            let llo = (&tlo + &slo) / &two;
            let lhi = (&thi + &shi) / &two;
            if llo < lhi && sturm_count(&candidate, &llo, &lhi)? == 1 {
                let lambda = AlgebraicReal::from_bracket(&candidate, llo, lhi)?;
                return Ok((lambda, candidate, elimination));
            }
        }
        nu.refine_once();
        bits = (bits + 8).min(4096);
    }
}

/// The stretch factor of `T_A T_B` itself, requiring `nu > 4`.
pub fn stretch_ta_tb(sys: &CurveSystem) -> Result<AlgebraicReal> {
    let spectrum = analyze(sys)?;
    let four = BigRational::from(BigInt::from(4));
    if spectrum.nu.cmp_rational(&four) != Ordering::Greater {
        return Err(Error::NotHyperbolic(format!(
            "nu = {} is not above 4",
            spectrum.nu
        )));
    }
    // trace(rho(T_A T_B)) = 2 - nu < -2; |trace| = nu - 2.
    let abs_trace = IntPoly::from_i64(&[-2, 1]);
    let (stretch, _, _) = stretch_from_abs_trace(&spectrum, &abs_trace)?;
    Ok(stretch)
}

/// The canonical degree-2 deg(c) polynomial of the `T_A T_B` stretch before
/// stripping: `x^(deg c) c(x + 1/x + 2)` for `c` the nu-factor of the Gram
/// characteristic polynomial. For the standard systems this equals the
/// two-multitwist family polynomial exactly.
pub fn stretch_ta_tb_polynomial(sys: &CurveSystem) -> Result<IntPoly> {
    let spectrum = analyze(sys)?;
    let four = BigRational::from(BigInt::from(4));
    if spectrum.nu.cmp_rational(&four) != Ordering::Greater {
        return Err(Error::NotHyperbolic(format!(
            "nu = {} is not above 4",
            spectrum.nu
        )));
    }
    spectrum.modulus.compose_x_plus_inv_plus_two()
}
