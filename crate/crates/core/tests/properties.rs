//! Property tests for the algebraic invariants, each checked against an
//! independent computation in this file.

use proptest::prelude::*;

use fvblab_core::analysis::{common_invariant_line, compare_irreducibility, kernel_search, random_bindings, PmReading};
use fvblab_core::braid::{fvb2_enumerate, fvb_presentation, reduce_word, GenKind, Generator, Word};
use fvblab_core::catalog::{family, verify_relations, FamilyId};
use fvblab_core::classifier::census_involutions_2x2;
use fvblab_core::linalg::{algebra_closure_dim, Matrix};
use fvblab_core::scalar::{FpElem, ParamBinding, ParamName, RatFunc, Rational, Scalar};
use fvblab_core::Error;

// ---------------------------------------------------------------- scalars

/// Expression trees over two variables, evaluated two ways: through
/// `RatFunc` and directly in ℚ.
#[derive(Clone, Debug)]
enum Expr {
    Int(i64),
    Var(ParamName),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-4i64..=4).prop_map(Expr::Int),
        Just(Expr::Var(ParamName::B)),
        Just(Expr::Var(ParamName::Y)),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(a.into(), b.into())),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(a.into(), b.into())),
        ]
    })
}

/// `None` when a divisor is identically zero.
fn to_ratfunc(e: &Expr) -> Option<RatFunc> {
    Some(match e {
        Expr::Int(v) => RatFunc::integer(*v),
        Expr::Var(p) => RatFunc::var(*p),
        Expr::Add(a, b) => to_ratfunc(a)?.add(&to_ratfunc(b)?),
        Expr::Sub(a, b) => to_ratfunc(a)?.sub(&to_ratfunc(b)?),
        Expr::Mul(a, b) => to_ratfunc(a)?.mul(&to_ratfunc(b)?),
        Expr::Div(a, b) => to_ratfunc(a)?.div(&to_ratfunc(b)?).ok()?,
    })
}

/// Direct evaluation; `None` when some divisor vanishes at the point.
fn eval(e: &Expr, b: &Rational, y: &Rational) -> Option<Rational> {
    Some(match e {
        Expr::Int(v) => Rational::integer(*v),
        Expr::Var(p) if *p == ParamName::B => b.clone(),
        Expr::Var(_) => y.clone(),
        Expr::Add(l, r) => &eval(l, b, y)? + &eval(r, b, y)?,
        Expr::Sub(l, r) => &eval(l, b, y)? - &eval(r, b, y)?,
        Expr::Mul(l, r) => &eval(l, b, y)? * &eval(r, b, y)?,
        Expr::Div(l, r) => eval(l, b, y)?.checked_div(&eval(r, b, y)?).ok()?,
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn point(b: &Rational, y: &Rational) -> ParamBinding {
    ParamBinding::new().with(ParamName::B, b.clone()).with(ParamName::Y, y.clone())
}

fn specialize_opt(f: &RatFunc, at: &ParamBinding) -> Option<Rational> {
    match f.specialize(at) {
        Ok(v) => Some(v),
        Err(Error::DenominatorVanishes) | Err(Error::DivisionByZero) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn specialization_is_a_homomorphism(e in expr(), f in expr(), b in rational(), y in rational(), op in 0usize..4) {
        let (Some(fe), Some(ff)) = (to_ratfunc(&e), to_ratfunc(&f)) else { return Ok(()) };
        let at = point(&b, &y);
        let (Some(ve), Some(vf)) = (specialize_opt(&fe, &at), specialize_opt(&ff, &at)) else { return Ok(()) };
        let combined = match op {
            0 => Some(fe.add(&ff)),
            1 => Some(fe.sub(&ff)),
            2 => Some(fe.mul(&ff)),
            _ => fe.div(&ff).ok(),
        };
        let expected = match op {
            0 => Some(&ve + &vf),
            1 => Some(&ve - &vf),
            2 => Some(&ve * &vf),
            _ => ve.checked_div(&vf).ok(),
        };
        if let (Some(c), Some(expected)) = (combined, expected) {
            // The canonical form may cancel a factor vanishing here, so the
            // combined function is defined whenever both sides are.
            prop_assert_eq!(specialize_opt(&c, &at), Some(expected));
        }
    }

    #[test]
    fn ratfunc_agrees_with_direct_evaluation(e in expr(), b in rational(), y in rational()) {
        let Some(fe) = to_ratfunc(&e) else { return Ok(()) };
        if let Some(direct) = eval(&e, &b, &y) {
            prop_assert_eq!(specialize_opt(&fe, &point(&b, &y)), Some(direct));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_is_unique(e in expr(), f in expr(), g in expr(), pts in prop::collection::vec((rational(), rational()), 20)) {
        let (Some(fe), Some(ff), Some(fg)) = (to_ratfunc(&e), to_ratfunc(&f), to_ratfunc(&g)) else { return Ok(()) };
        // A rewriting of e that is equal as a function must be equal as data.
        if let Ok(rewritten) = fe.mul(&fg).div(&fg) {
            prop_assert_eq!(&rewritten, &fe);
        }
        prop_assert_eq!(&fe.add(&fg).sub(&fg), &fe);

        let values = |h: &RatFunc| -> Vec<Option<Rational>> {
            pts.iter().map(|(b, y)| specialize_opt(h, &point(b, y))).collect()
        };
        let (ve, vf) = (values(&fe), values(&ff));
        let differ = ve.iter().zip(&vf).any(|(a, b)| matches!((a, b), (Some(a), Some(b)) if a != b));
        let zero_diff = fe.sub(&ff).is_identically_zero();
        prop_assert_eq!(fe == ff, zero_diff);
        if zero_diff {
            prop_assert!(!differ);
        } else {
            // Twenty random points of a nonzero function of two variables
            // with small coefficients: at least one must separate.
            let comparable = ve.iter().zip(&vf).filter(|(a, b)| a.is_some() && b.is_some()).count();
            prop_assume!(comparable >= 10);
            prop_assert!(differ, "{} vs {} agree on every sampled point", fe, ff);
        }
    }
}

#[test]
fn fp_inverse_exhaustive() {
    for p in [2u64, 3, 5, 7] {
        for x in 0..p {
            for y in 1..p {
                let (fx, fy) = (FpElem::new(x as i64, p).unwrap(), FpElem::new(y as i64, p).unwrap());
                let inv = fy.inverse().unwrap();
                assert_eq!(fx.times(&fy).times(&inv), fx);
                // Independent: the inverse is the unique z with y·z ≡ 1.
                let z = (1..p).find(|z| (y * z) % p == 1).unwrap();
                assert_eq!(inv.value(), z);
            }
        }
    }
}

// ---------------------------------------------------------------- linear algebra

fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 7 => -3i64..=3], n * n).prop_map(move |v| {
            Matrix::from_fn(n, (), |r, c| Rational::integer(v[r * n + c]))
        })
    })
}

/// Gauss–Jordan rank, written out independently of the library.
fn naive_rank(m: &Matrix<Rational>) -> usize {
    let mut rows = m.rows();
    let n = m.dim();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        for r in 0..n {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].checked_div(&rows[rank][col]).unwrap();
                for c in 0..n {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn invertible(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    small_matrix(max_dim).prop_filter("singular", |m| naive_rank(m) == m.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity(m in small_matrix(6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank(), naive_rank(&m));
        prop_assert_eq!(m.rank() + k.dim(), m.dim());
        for v in k.basis() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// P·diag(±1)·P⁻¹ is an involution whose eigenspaces are spanned by
    /// the columns of P.
    #[test]
    fn involution_eigenspaces(p in invertible(4), signs in prop::collection::vec(any::<bool>(), 4)) {
        let n = p.dim();
        let d = Matrix::diagonal((0..n).map(|i| Rational::integer(if signs[i] { 1 } else { -1 })).collect(), ());
        let m = p.mul(&d).unwrap().mul(&p.inverse().unwrap()).unwrap();
        prop_assert!(m.is_involution());
        prop_assert_eq!(m.inverse().unwrap(), m.clone());
        let plus = (0..n).filter(|&i| signs[i]).count();
        for (lam, expected) in [(Rational::one(), plus), (-Rational::one(), n - plus)] {
            let e = m.eigenspace(&lam);
            prop_assert_eq!(e.dim(), expected);
            for v in e.basis() {
                let mv = m.apply(v).unwrap();
                let lv: Vec<Rational> = v.iter().map(|x| &lam * x).collect();
                prop_assert_eq!(mv, lv);
            }
        }
    }

    #[test]
    fn closure_monotone_and_conjugation_invariant(
        gens in (2usize..=3).prop_flat_map(|n| prop::collection::vec(
            prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| Matrix::from_fn(n, (), |r, c| Rational::integer(v[r * n + c]))),
            1..=3,
        )),
        extra in prop::collection::vec(-2i64..=2, 9),
        conj in invertible(3),
    ) {
        let n = gens[0].dim();
        prop_assume!(conj.dim() == n);
        let base = algebra_closure_dim(&gens).unwrap();
        let mut more = gens.clone();
        more.push(Matrix::from_fn(n, (), |r, c| Rational::integer(extra[r * n + c])));
        prop_assert!(algebra_closure_dim(&more).unwrap() >= base);
        let inv = conj.inverse().unwrap();
        let moved: Vec<_> = gens.iter().map(|g| inv.mul(g).unwrap().mul(&conj).unwrap()).collect();
        prop_assert_eq!(algebra_closure_dim(&moved).unwrap(), base);
        prop_assert!(base >= 1 && base <= n * n);
    }
}

// ---------------------------------------------------------------- words

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), 1usize..=3), 0..=max_len).prop_map(|v| {
        Word::new(v.into_iter().map(|(s, i)| if s { Generator::sigma(i) } else { Generator::rho(i) }).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Cancelling adjacent equal letters in a random order always ends at
    /// `reduce_word`'s answer.
    #[test]
    fn reduction_is_confluent(w in word(16), schedule in prop::collection::vec(any::<prop::sample::Index>(), 32)) {
        let mut letters = w.letters().to_vec();
        let mut picks = schedule.into_iter();
        loop {
            let spots: Vec<usize> = (0..letters.len().saturating_sub(1)).filter(|&i| letters[i] == letters[i + 1]).collect();
            if spots.is_empty() {
                break;
            }
            let i = match picks.next() {
                Some(ix) => spots[ix.index(spots.len())],
                None => spots[0],
            };
            letters.drain(i..i + 2);
        }
        let r = reduce_word(&w);
        prop_assert_eq!(r.letters(), &letters[..]);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(reduce_word(&r), r);
    }
}

#[test]
fn fvb2_enumeration_counts() {
    for len in 0..=12 {
        let words = fvb2_enumerate(len);
        assert_eq!(words.len(), 2 * len);
        let distinct: std::collections::BTreeSet<String> = words.iter().map(|w| reduce_word(w).to_string()).collect();
        assert_eq!(distinct.len(), words.len());
        assert!(words.iter().all(|w| w.is_reduced() && w.len() <= len && !w.is_empty()));
    }
}

#[test]
fn relation_index_spans() {
    for n in 2..=7 {
        let p = fvb_presentation(n).unwrap();
        for r in &p.relations {
            // Involution relators have the empty word on the right.
            if !r.rhs.is_empty() {
                assert_eq!((r.lhs.min_index(), r.lhs.max_index()), (r.rhs.min_index(), r.rhs.max_index()), "{r}");
            } else {
                assert!(matches!(r.family, 5 | 8), "{r}");
            }
            assert!(r.lhs.max_index() < n);
            // Shifting by one strand gives the next instance of the same family.
            if r.lhs.max_index() + 1 < n {
                let (ls, rs) = (r.lhs.shifted(1), r.rhs.shifted(1));
                assert!(p.relations.iter().any(|q| q.family == r.family && q.lhs == ls && q.rhs == rs), "{r}");
            }
        }
    }
}

// ---------------------------------------------------------------- catalog

#[test]
fn catalog_involutions_and_homogeneity() {
    for id in FamilyId::lambdas().into_iter().chain(FamilyId::gammas()).chain(FamilyId::deltas()) {
        for n in [3usize, 4, 5] {
            let n = if matches!(id, FamilyId::Lambda(_)) { 2 } else { n };
            let rep = family(id, n).unwrap();
            assert!(rep.is_homogeneous(), "{id} n={n}");
            for g in Generator::all(n, true) {
                let m = rep.image(g).unwrap();
                let printed_typo = matches!(id, FamilyId::Delta(5 | 7)) && g.kind == GenKind::Rho;
                assert_eq!(m.is_involution(), !printed_typo, "{id} {g}");
                if !printed_typo {
                    assert_eq!(&m.inverse().unwrap(), m);
                }
            }
        }
    }
}

#[test]
fn braid_references_fail_sigma_squared() {
    for id in FamilyId::braid_references() {
        for n in 3..=5 {
            let rep = family(id, n).unwrap();
            assert!(verify_relations(&rep).all_pass(), "{id} n={n}");
            let s2 = rep.eval_word(&Word::new(vec![Generator::sigma(1), Generator::sigma(1)])).unwrap();
            assert!(!s2.is_identity(), "{id}: σ² is the identity");
        }
    }
}

// ---------------------------------------------------------------- census / analysis

#[test]
fn involution_census_conservation() {
    for p in [2u64, 3, 5, 7] {
        let r = census_involutions_2x2(p).unwrap();
        assert_eq!(r.total_candidates, (p as u128).pow(4));
        assert!(r.is_conserved());
        // Brute force: count 2×2 matrices with M² = I directly.
        let mut count = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let sq = [(a * a + b * c) % p, (a * b + b * d) % p, (c * a + d * c) % p, (c * b + d * d) % p];
                        count += usize::from(sq == [1 % p, 0, 0, 1 % p]);
                    }
                }
            }
        }
        assert_eq!(r.solutions, count, "p={p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_line_is_sound_and_matches_closure(ix in 1u8..=12, seed in any::<u64>()) {
        let id = FamilyId::Lambda(ix);
        let sym = family(id, 2).unwrap();
        for b in random_bindings(id, 2, 4, seed, |_| true).unwrap() {
            let rep = sym.specialize(&b).unwrap();
            let line = common_invariant_line(&rep).unwrap();
            if let Some(l) = &line {
                prop_assert_eq!(l.dim(), 1);
                for m in rep.generator_images() {
                    prop_assert!(l.is_invariant_under(&m));
                }
            }
            let dim = algebra_closure_dim(&rep.generator_images()).unwrap();
            prop_assert_eq!(line.is_none(), dim == 4, "{} at {}", id, b);
        }
    }
}

#[test]
fn comparison_conservation_and_stable_search() {
    for id in [FamilyId::Lambda(1), FamilyId::Lambda(3), FamilyId::Lambda(9)] {
        for reading in PmReading::ALL {
            let r = compare_irreducibility(id, 60, 3, reading).unwrap();
            assert_eq!(r.agreements + r.disagreements.len(), r.sample_count);
            assert!(r.is_conserved());
        }
    }
    let sym = family(FamilyId::Lambda(7), 2).unwrap();
    let b = ParamBinding::parse("c=2,z=-2").unwrap();
    let rep = sym.specialize(&b).unwrap();
    let first = kernel_search(&rep, 12).unwrap();
    let second = kernel_search(&rep, 12).unwrap();
    assert_eq!(serde_json::to_string(&first).unwrap(), serde_json::to_string(&second).unwrap());
    assert!(first.word.is_some());
}
