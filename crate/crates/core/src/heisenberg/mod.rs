//! The Heisenberg vertex algebra of the Cartan of `sl(l+1)` and its
//! oscillator modules `pi_lambda`.
//!
//! States are written in the simple-root basis: label `i` stands for
//! `alpha_{i+1}`, so the Gram matrix is the Cartan matrix. Cartan vectors and
//! weights are passed in epsilon coordinates (see [`crate::rootsys`]).

pub mod engine;
pub mod fock;

use num_traits::{One, Zero};

use crate::exactcore::linalg::solve_square;
use crate::exactcore::{q, qi, QSeries, Scalar, Q};
use crate::rootsys::RootSystemA;
pub use engine::{Anchor, FieldEngine, Peel, Strategy};
pub use fock::{monomial_ticks, Fock, HeisSpace, Monomial};

/// A vector of the oscillator module `pi_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockState {
    /// Highest weight in epsilon coordinates.
    pub lambda: Vec<Q>,
    pub state: Fock<Q>,
}

impl FockState {
    pub fn new(lambda: Vec<Q>, state: Fock<Q>) -> Self {
        FockState { lambda, state }
    }

    /// `|lambda>`.
    pub fn highest(lambda: Vec<Q>) -> Self {
        FockState { lambda, state: Fock::vacuum() }
    }

    /// The vacuum `|0>` of the vertex algebra.
    pub fn vacuum(rank: usize) -> Self {
        Self::highest(vec![Q::zero(); rank + 1])
    }

    pub fn rank(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.state.is_zero()
    }

    /// Conformal weight `|lambda|^2/2 + sum of mode depths`, if homogeneous.
    pub fn conformal_weight(&self) -> Option<Q> {
        let base = norm_sq(&self.lambda) / qi(2);
        self.state.homogeneous_ticks().map(|t| base + qi(t))
    }
}

fn norm_sq(x: &[Q]) -> Q {
    x.iter().map(|a| a * a).sum()
}

/// Simple-root coordinates of a Cartan vector given in epsilon coordinates.
pub fn cartan_coords(x: &[Q]) -> Vec<Q> {
    RootSystemA::new(x.len() - 1).simple_coords(x)
}

/// The vacuum algebra `F` in the simple-root basis.
pub fn vacuum_space(rank: usize) -> HeisSpace<Q> {
    module_space(&vec![Q::zero(); rank + 1])
}

/// `pi_lambda`: `alpha_i` acts on the highest-weight vector by `<lambda, alpha_i>`.
pub fn module_space(lambda: &[Q]) -> HeisSpace<Q> {
    let rs = RootSystemA::new(lambda.len() - 1);
    let zero_modes = rs.simple_roots().iter().map(|a| rs.form(lambda, a)).collect();
    HeisSpace::untwisted(rs.cartan_matrix(), zero_modes)
}

/// `x_{(n)} v` for a Cartan vector `x`.
pub fn heis_mode(x: &[Q], n: i64, v: &FockState) -> FockState {
    let space = module_space(&v.lambda);
    FockState::new(v.lambda.clone(), space.apply_vector_mode(&cartan_coords(x), n, &v.state))
}

/// `x_{(-1)}|0>` as a state of `F`.
pub fn generator_state(x: &[Q]) -> Fock<Q> {
    let space = vacuum_space(x.len() - 1);
    space.apply_vector_mode(&cartan_coords(x), -1, &Fock::vacuum())
}

/// `a_(n) b` for `a` in `F` and `b` in `pi_lambda`.
pub fn nth_product(a: &Fock<Q>, n: i64, b: &FockState) -> FockState {
    let engine = FieldEngine::new(module_space(&b.lambda));
    FockState::new(b.lambda.clone(), engine.mode(a, n, &b.state))
}

/// `(1/2) sum_i a^i_(-1) b^i_(-1)|0>` for a basis `a^i` (epsilon coordinates)
/// and its dual basis `b^i`.
pub fn conformal_vector_from_basis(rank: usize, basis: &[Vec<Q>]) -> Fock<Q> {
    assert_eq!(basis.len(), rank);
    let rs = RootSystemA::new(rank);
    let gram: Vec<Vec<Q>> = basis.iter().map(|a| basis.iter().map(|b| rs.form(a, b)).collect()).collect();
    let space = vacuum_space(rank);
    let mut out = Fock::zero();
    for (i, ai) in basis.iter().enumerate() {
        // dual vector b^i = sum_j (G^{-1})_{ij} a^j
        let mut e = vec![Q::zero(); rank];
        e[i] = Q::one();
        let row = solve_square(gram.clone(), e).expect("basis is nondegenerate");
        let mut bi = vec![Q::zero(); rank + 1];
        for (j, aj) in basis.iter().enumerate() {
            for (x, y) in bi.iter_mut().zip(aj) {
                *x += &row[j] * y;
            }
        }
        let inner = space.apply_vector_mode(&cartan_coords(&bi), -1, &Fock::vacuum());
        let outer = space.apply_vector_mode(&cartan_coords(ai), -1, &inner);
        out.add_scaled(&outer, &q(1, 2));
    }
    out
}

/// The conformal vector, built from the simple roots and fundamental weights.
pub fn conformal_vector(rank: usize) -> Fock<Q> {
    conformal_vector_from_basis(rank, &RootSystemA::new(rank).simple_roots())
}

/// The same vector from the basis `e_1 - e_{i+1}`.
pub fn conformal_vector_alt(rank: usize) -> Fock<Q> {
    let rs = RootSystemA::new(rank);
    let basis: Vec<Vec<Q>> = (1..=rank).map(|i| rs.root(0, i)).collect();
    conformal_vector_from_basis(rank, &basis)
}

/// `L_n v = omega_(n+1) v`.
pub fn virasoro_mode(n: i64, v: &FockState) -> FockState {
    nth_product(&conformal_vector(v.rank()), n + 1, v)
}

/// Virasoro modes on a fixed module, sharing one engine.
pub struct VirasoroAction {
    omega: Fock<Q>,
    engine: FieldEngine<Q>,
}

impl VirasoroAction {
    pub fn new(lambda: &[Q]) -> Self {
        VirasoroAction { omega: conformal_vector(lambda.len() - 1), engine: FieldEngine::new(module_space(lambda)) }
    }

    pub fn l(&self, n: i64, v: &Fock<Q>) -> Fock<Q> {
        self.engine.mode(&self.omega, n + 1, v)
    }
}

/// Zero mode of `e^alpha` from `pi_beta` to `pi_{beta+alpha}` (cocycle-free):
/// the `z^{-1}` coefficient of
/// `z^{<alpha,beta>} exp(sum_{k>0} z^k alpha_(-k)/k) exp(-sum_{k>0} z^{-k} alpha_(k)/k)`.
pub fn screening_zero_mode(alpha: &[Q], v: &FockState) -> FockState {
    let rs = RootSystemA::new(v.rank());
    let space = module_space(&v.lambda);
    let coords = cartan_coords(alpha);
    let pair = rs.form(alpha, &v.lambda);
    assert!(pair.is_integer(), "screening needs an integral pairing");
    let pair = pair.to_integer().try_into().unwrap_or(i64::MAX);
    let image: Vec<Q> = v.lambda.iter().zip(alpha).map(|(a, b)| a + b).collect();
    let target_space = module_space(&image);
    let top = v.state.max_ticks();

    // E_b v with E_b = -(1/b) sum_{k=1}^b alpha_(k) E_{b-k}
    let mut e_terms: Vec<Fock<Q>> = vec![v.state.clone()];
    for b in 1..=top {
        let mut acc = Fock::zero();
        for k in 1..=b {
            let prev = &e_terms[(b - k) as usize];
            acc.add_scaled(&space.apply_vector_mode(&coords, k, prev), &qi(1));
        }
        e_terms.push(acc.scale(&q(-1, b)));
    }
    let mut out = Fock::zero();
    for (b, eb) in e_terms.iter().enumerate() {
        let a = b as i64 - 1 - pair;
        if a < 0 || eb.is_zero() {
            continue;
        }
        // F_a w with F_a = (1/a) sum_{k=1}^a alpha_(-k) F_{a-k}
        let mut f_terms: Vec<Fock<Q>> = vec![eb.clone()];
        for s in 1..=a {
            let mut acc = Fock::zero();
            for k in 1..=s {
                acc.add_scaled(&target_space.apply_vector_mode(&coords, -k, &f_terms[(s - k) as usize]), &qi(1));
            }
            f_terms.push(acc.scale(&q(1, s)));
        }
        out.add_scaled(&f_terms[a as usize], &qi(1));
    }
    FockState::new(image, out)
}

/// `q^{|lambda|^2/2} / phi(q)^dim` to relative order `n_max`.
pub fn oscillator_character(lambda: &[Q], dim: u32, n_max: usize) -> QSeries {
    QSeries::eta_quotient(norm_sq(lambda) / qi(2), dim, n_max)
}

/// Brackets `[L_m, L_n] v - (m-n) L_{m+n} v - central term`, zero when the
/// Virasoro relations with central charge `rank` hold on `v`.
pub fn virasoro_defect(action: &VirasoroAction, rank: usize, m: i64, n: i64, v: &Fock<Q>) -> Fock<Q> {
    let lhs = action.l(m, &action.l(n, v)).sub(&action.l(n, &action.l(m, v)));
    let mut rhs = action.l(m + n, v).scale(&qi(m - n));
    if m + n == 0 {
        rhs.add_scaled(v, &(q(m * m * m - m, 12) * qi(rank as i64)));
    }
    lhs.sub(&rhs)
}

/// Borcherds defect for `a, b` in `F` acting on `c` in `pi_lambda`:
/// `sum_j C(m,j)(a_(n+j)b)_(m+k-j)c - sum_j (-1)^j C(n,j)[a_(m+n-j)b_(k+j)c - (-1)^n b_(n+k-j)a_(m+j)c]`.
pub fn borcherds_defect(
    engine: &FieldEngine<Q>,
    a: &Fock<Q>,
    b: &Fock<Q>,
    c: &Fock<Q>,
    (m, n, k): (i64, i64, i64),
) -> Fock<Q> {
    borcherds_defect_generic(engine, a, b, c, (m, n, k))
}

/// Same identity over any scalar field and mode denominator; `m`, `k` are in
/// ticks, `n` is an integer.
pub fn borcherds_defect_generic<S: Scalar>(
    engine: &FieldEngine<S>,
    a: &Fock<S>,
    b: &Fock<S>,
    c: &Fock<S>,
    (m, n, k): (i64, i64, i64),
) -> Fock<S> {
    use crate::exactcore::{generalized_binomial, int_binomial};
    let d = engine.module().denom;
    let alg = FieldEngine::new(engine.algebra().clone());
    let wa = a.max_ticks();
    let wb = b.max_ticks();
    let ec = c.max_ticks();
    let mut lhs = Fock::zero();
    let mut j = 0i64;
    while n + j < wa + wb {
        let coef = generalized_binomial(&q(m, d), j as u64);
        if !coef.is_zero() {
            let ab = alg.mode(a, n + j, b);
            lhs.add_scaled(&engine.mode(&ab, m + k - j * d, c), &S::from_rational(&coef));
        }
        j += 1;
    }
    let mut rhs = Fock::zero();
    let sign_n = if n % 2 == 0 { qi(1) } else { qi(-1) };
    let mut j = 0i64;
    while k + j * d <= ec + wb * d {
        let coef = Q::from_integer(int_binomial(n, j as u64)) * if j % 2 == 0 { qi(1) } else { qi(-1) };
        let bc = engine.mode(b, k + j * d, c);
        rhs.add_scaled(&engine.mode(a, m + (n - j) * d, &bc), &S::from_rational(&coef));
        j += 1;
    }
    let mut j = 0i64;
    while m + j * d <= ec + wa * d {
        let coef = Q::from_integer(int_binomial(n, j as u64)) * if j % 2 == 0 { qi(1) } else { qi(-1) };
        let ac = engine.mode(a, m + j * d, c);
        rhs.add_scaled(&engine.mode(b, (n - j) * d + k, &ac), &S::from_rational(&(-&coef * &sign_n)));
        j += 1;
    }
    lhs.sub(&rhs)
}
