//! Named verification suites over the five modules, with deterministic
//! machine-readable reports.
//!
//! Every check records an id, its parameters and a verdict; a suite passes
//! iff all its checks do. Output ordering is canonical (sorted by id)
//! regardless of execution order.

use crate::chains::{
    boundary, cone_fill, cylinder_end, homology::complex_from_top_simplices,
    homology::homology, prism, push_forward, subdiv_homotopy, subdivide, AffineMap,
    AffineSimplex, Chain, Contraction, QPoint,
};
use crate::certified::pi_multiple_le;
use crate::config::{Lcg, WorkbenchConfig};
use crate::currents::{
    current_to_chain1, winding_vector, GraphChain1, GraphCurrent1, GraphMap, GraphPath,
    GraphPoint, MetricGraph, PathStep,
};
use crate::earring::{
    commutator_loop, distance_pi_coeff, project_word, sigma, sigma1_blocks, verify_recursion,
    EarringPoint,
};
use crate::freegroup::{abelianize, commutator_power, reduce, single_commutator, Word};
use crate::rational::{format_rational, int, rat, Rational};
use crate::seqorder::{
    compare, density_report, enumerate_b_capped, lambda, locate, tau, tau_oracle, LocateResult,
    Seq,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
            pass: true,
        }
    }

    fn check(&mut self, id: &str, params: String, outcome: (bool, String)) {
        self.pass &= outcome.0;
        self.checks.push(CheckResult {
            id: id.to_string(),
            params,
            pass: outcome.0,
            detail: outcome.1,
        });
    }

    fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    /// Marks a synthetic failure; used by harness tests for the exit-code
    /// contract.
    pub fn inject_failure(&mut self, id: &str) {
        self.pass = false;
        self.checks.push(CheckResult {
            id: id.to_string(),
            params: String::new(),
            pass: false,
            detail: "injected failure".to_string(),
        });
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "pass": self.pass,
            "checks": self.checks.iter().map(|c| json!({
                "id": c.id,
                "params": c.params,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn verdict(pass: bool, detail: impl Into<String>) -> (bool, String) {
    (pass, detail.into())
}

/// All elements of `B_1 ∪ … ∪ B_n` in `≺` order.
fn b_up_to(n: u32, cap: u32) -> Vec<Seq> {
    let mut all = Vec::new();
    for k in 1..=n {
        all.extend(enumerate_b_capped(k, cap).expect("within cap"));
    }
    all.sort();
    all
}

pub fn seqorder_suite(cfg: &WorkbenchConfig) -> SuiteReport {
    let mut report = SuiteReport::new("seqorder");
    let cap = cfg.enum_max.max(8);

    // |B_n| = n!
    {
        let mut all_ok = true;
        let mut detail = String::new();
        for n in 1..=cfg.enum_max.min(7) {
            let count = enumerate_b_capped(n, cap).unwrap().len();
            let expected = crate::rational::factorial(n).to_usize().unwrap();
            if count != expected {
                all_ok = false;
                detail = format!("|B_{n}| = {count}, expected {expected}");
                break;
            }
        }
        report.check(
            "cardinality-factorial",
            format!("n = 1..{}", cfg.enum_max.min(7)),
            verdict(all_ok, if all_ok { "|B_n| = n!".into() } else { detail }),
        );
    }

    // total order: sorted enumeration is strictly increasing; transitivity
    // over all triples of B_4
    {
        let all = b_up_to(5, cap);
        let strict = all
            .windows(2)
            .all(|w| compare(&w[0], &w[1]) == Ordering::Less);
        let b4 = enumerate_b_capped(4, cap).unwrap();
        let mut transitive = true;
        'outer: for a in &b4 {
            for b in &b4 {
                for c in &b4 {
                    if compare(a, b) != Ordering::Greater
                        && compare(b, c) != Ordering::Greater
                        && compare(a, c) == Ordering::Greater
                    {
                        transitive = false;
                        break 'outer;
                    }
                }
            }
        }
        report.check(
            "order-total",
            "strict chain on B_1..B_5; transitivity on B_4^3".into(),
            verdict(strict && transitive, "exactly one of <, =, > holds"),
        );
    }

    // τ strictly order preserving on B_1..B_6
    {
        let all = b_up_to(6, cap);
        let values: Vec<Rational> = all.iter().map(|s| tau(s).unwrap()).collect();
        let monotone = values.windows(2).all(|w| w[0] < w[1]);
        report.check(
            "tau-strictly-monotone",
            format!("{} elements of B_1..B_6", all.len()),
            verdict(monotone, "s < t implies tau(s) < tau(t)"),
        );
    }

    // closed form against the series oracle
    {
        let mut worst = Rational::zero();
        let mut all_ok = true;
        for s in b_up_to(5, cap) {
            let value = tau(&s).unwrap();
            let (lo, hi) = tau_oracle(&s, cfg.oracle_depth).unwrap();
            if value < lo || value > hi {
                all_ok = false;
            }
            let width = &hi - &lo;
            if width > worst {
                worst = width;
            }
        }
        report.check(
            "tau-oracle-bracket",
            format!("B_1..B_5, oracle depth {}", cfg.oracle_depth),
            verdict(
                all_ok,
                format!("interval width {}", format_rational(&worst)),
            ),
        );
    }

    // increment identities: τ(s+<1>) − τ(s) = λ(n); τ(s+<m+1>) − τ(s+<m>) = 2λ(n+1)
    {
        let mut unit_ok = true;
        let mut step_ok = true;
        for n in 1..=5u32 {
            let lam = lambda(n).unwrap();
            let two_lam_next = int(2) * lambda(n + 1).unwrap();
            for s in enumerate_b_capped(n, cap).unwrap() {
                let t = tau(&s).unwrap();
                unit_ok &= tau(&s.extended(1)).unwrap() - &t == lam;
                for m in 1..=n {
                    let a = tau(&s.extended(m)).unwrap();
                    let b = tau(&s.extended(m + 1)).unwrap();
                    step_ok &= b - a == two_lam_next;
                }
            }
        }
        report.check(
            "tau-unit-increment",
            "B_1..B_5".into(),
            verdict(unit_ok, "tau(s+<1>) - tau(s) = lambda(n)"),
        );
        report.check(
            "tau-sibling-step",
            "B_1..B_5, m = 1..n".into(),
            verdict(step_ok, "tau(s+<m+1>) - tau(s+<m>) = 2 lambda(n+1)"),
        );
    }

    // translation: τ(s+s'') − τ(s'+s'') = τ(s) − τ(s')
    {
        let b3 = enumerate_b_capped(3, cap).unwrap();
        let mut suffixes: Vec<Seq> = Vec::new();
        for v in 1..=4u32 {
            suffixes.push(Seq::singleton(v));
            for w in 1..=5u32 {
                suffixes.push(Seq::singleton(v).extended(w));
            }
        }
        let mut all_ok = true;
        for s in &b3 {
            for s2 in &b3 {
                let base = tau(s).unwrap() - tau(s2).unwrap();
                for suffix in &suffixes {
                    let left = s.concat(suffix);
                    let right = s2.concat(suffix);
                    if !left.is_bounded() || !right.is_bounded() {
                        continue;
                    }
                    if tau(&left).unwrap() - tau(&right).unwrap() != base {
                        all_ok = false;
                    }
                }
            }
        }
        report.check(
            "tau-translation",
            "s, s' in B_3; suffixes of length <= 2".into(),
            verdict(all_ok, "tau(s+s'') - tau(s'+s'') = tau(s) - tau(s')"),
        );
    }

    // difference formula: truncated sum + tail brackets τ(s') − τ(s)
    {
        let all = b_up_to(4, cap);
        let depth = 8u32;
        let tail = Rational::new(BigInt::one(), crate::rational::pow2(depth));
        let enumeration = b_up_to(depth, depth.max(cap));
        let weights: Vec<Rational> = enumeration
            .iter()
            .map(|t| lambda(t.len() as u32).unwrap())
            .collect();
        let mut all_ok = true;
        for (i, s) in all.iter().enumerate() {
            // spot-check a spread of successors
            for j in [i + 1, i + 5, i + 17] {
                let Some(s2) = all.get(j) else { continue };
                let truncated: Rational = enumeration
                    .iter()
                    .zip(&weights)
                    .filter(|(t, _)| {
                        compare(t, s) != Ordering::Less && compare(t, s2) == Ordering::Less
                    })
                    .map(|(_, w)| w.clone())
                    .sum();
                let diff = tau(s2).unwrap() - tau(s).unwrap();
                if diff < truncated || diff > &truncated + &tail {
                    all_ok = false;
                }
            }
        }
        report.check(
            "tau-difference-formula",
            format!("B_1..B_4 pairs, truncation depth {depth}"),
            verdict(all_ok, "sum over s <= t < s' brackets the difference"),
        );
    }

    // interval disjointness: intervals meet in at most the shared endpoint
    {
        let all = b_up_to(6, cap);
        let mut all_ok = true;
        for w in all.windows(2) {
            let end = tau(&w[0]).unwrap() + lambda(w[0].len() as u32).unwrap();
            let start = tau(&w[1]).unwrap();
            if end > start {
                all_ok = false;
            }
        }
        report.check(
            "interval-disjointness",
            "consecutive pairs in B_1..B_6".into(),
            verdict(all_ok, "intersection is empty or one endpoint"),
        );
    }

    // density: max gap non-increasing, small at the final depth
    {
        let mut gaps = Vec::new();
        let mut monotone = true;
        let mut previous: Option<Rational> = None;
        for depth in 1..=6u32 {
            let r = density_report(depth, cfg.density_grid).unwrap();
            if let Some(p) = &previous {
                monotone &= &r.max_gap <= p;
            }
            previous = Some(r.max_gap.clone());
            gaps.push(format_rational(&r.max_gap));
        }
        report.check(
            "density-monotone",
            format!("depth 1..6, grid {}", cfg.density_grid),
            verdict(monotone, format!("max gaps: {}", gaps.join(", "))),
        );
    }

    // locate: interval containment and certified gap bounds on a grid
    {
        let mut all_ok = true;
        for j in 0..=80u32 {
            let x = rat(j as i64, 80);
            match locate(&x, cfg.depth).unwrap() {
                LocateResult::Interval { seq, offset } => {
                    all_ok &= tau(&seq).unwrap() + &offset == x;
                    all_ok &= offset < lambda(seq.len() as u32).unwrap();
                }
                LocateResult::Gap { bound, .. } => {
                    all_ok &= bound <= Rational::new(BigInt::one(), crate::rational::pow2(cfg.depth));
                }
            }
        }
        report.check(
            "locate-certified",
            format!("81 grid points, depth {}", cfg.depth),
            verdict(all_ok, "intervals exact; gap bounds within 2^-depth"),
        );
    }

    report.finish()
}

pub fn earring_suite(cfg: &WorkbenchConfig) -> SuiteReport {
    let mut report = SuiteReport::new("earring");

    // loop endpoints at the origin
    {
        let mut all_ok = true;
        for k in 1..=3u32 {
            let c = commutator_loop(k);
            all_ok &= c.start().is_origin() && c.end().is_origin();
            all_ok &= c.total_length() == &lambda(k).unwrap();
        }
        let (s0, e0) = sigma(1, &int(0), cfg.depth).unwrap();
        let (s1, e1) = sigma(1, &int(1), cfg.depth).unwrap();
        all_ok &= s0.is_origin() && e0.is_zero();
        all_ok &= s1.is_origin(); // x = 1 is a certified gap
        let _ = e1;
        report.check(
            "loop-endpoints",
            "c_k (k=1..3) and sigma_1".into(),
            verdict(all_ok, "all loops start and end at the origin"),
        );
    }

    // c_k is 1-Lipschitz (certified π comparison)
    {
        let mut all_ok = true;
        let mut coeffs = Vec::new();
        for k in 1..=3u32 {
            let coeff = commutator_loop(k).max_speed_pi_coeff();
            all_ok &= pi_multiple_le(&coeff, &int(1));
            coeffs.push(format_rational(&coeff));
        }
        report.check(
            "commutator-speed",
            "k = 1..3".into(),
            verdict(all_ok, format!("speed π-coefficients: {}", coeffs.join(", "))),
        );
    }

    // σ₁ is 1-Lipschitz on resolved sample pairs
    {
        let mut checked = 0u32;
        let mut all_ok = true;
        let n = cfg.samples.max(32);
        let mut points = Vec::new();
        for j in 0..n {
            let t = rat(j as i64, n as i64 - 1);
            let (p, err) = sigma(1, &t, cfg.depth).unwrap();
            if err.is_zero() {
                points.push((t, p));
            }
        }
        for pair in points.windows(2) {
            let (t1, p1) = &pair[0];
            let (t2, p2) = &pair[1];
            let coeff = distance_pi_coeff(p1, p2);
            all_ok &= pi_multiple_le(&coeff, &(t2 - t1));
            checked += 1;
        }
        report.check(
            "sigma1-lipschitz",
            format!("{checked} resolved consecutive pairs, depth {}", cfg.depth),
            verdict(all_ok && checked >= n / 2, "d(σ(t), σ(t')) <= |t - t'|"),
        );
    }

    // gap soundness: deeper evaluation stays within the certified bound
    {
        let mut all_ok = true;
        let mut gaps = 0u32;
        for j in 0..=60u32 {
            let t = rat(j as i64, 60);
            if let LocateResult::Gap { bound, .. } = locate(&t, 3).unwrap() {
                gaps += 1;
                let (p, deep_err) = sigma(1, &t, cfg.depth + 4).unwrap();
                let coeff = distance_pi_coeff(&p, &EarringPoint::Origin);
                all_ok &= pi_multiple_le(&coeff, &(&bound + &deep_err));
            }
        }
        report.check(
            "gap-soundness",
            format!("{gaps} shallow gaps re-evaluated at depth {}", cfg.depth + 4),
            verdict(all_ok, "certified bounds dominate the true distance"),
        );
    }

    // recursion identity σ_{n−1} = c_{n−1}·σ_n⋯σ_n
    {
        for n in 2..=cfg.recursion_max.min(4) {
            let r = verify_recursion(n, cfg.samples.max(100), cfg.depth + n, cfg.recursion_max)
                .unwrap();
            report.check(
                &format!("recursion-sigma-{n}"),
                format!("{} samples, {} resolved", r.samples, r.resolved),
                verdict(
                    r.pass && r.resolved >= 100.min(r.samples / 2),
                    format!("max discrepancy {}", format_rational(&r.max_discrepancy)),
                ),
            );
        }
    }

    // word projection: (aba⁻¹b⁻¹)^{k!}
    {
        let blocks = sigma1_blocks(3).unwrap();
        let a = Word::generator(1);
        let b = Word::generator(2);
        let mut all_ok = true;
        for k in 1..=3u32 {
            let expected = commutator_power(
                &a,
                &b,
                crate::rational::factorial(k).to_u32().unwrap(),
            );
            all_ok &= project_word(&blocks, k).unwrap() == expected;
        }
        report.check(
            "word-projection",
            "sigma_1 blocks up to generation 3; k = 1..3".into(),
            verdict(all_ok, "projection equals the k!-th commutator power"),
        );
    }

    // metric axioms at enclosure precision
    {
        let mut lcg = Lcg::new(cfg.seed);
        let mut points = vec![EarringPoint::Origin];
        for _ in 0..7 {
            let n = lcg.range(1, 9) as u64;
            let turn = rat(lcg.range(1, 15), 16);
            points.push(EarringPoint::on_circle(n, &turn));
        }
        let mut all_ok = true;
        for x in &points {
            for y in &points {
                let dxy = distance_pi_coeff(x, y);
                all_ok &= dxy == distance_pi_coeff(y, x);
                for z in &points {
                    all_ok &= dxy <= distance_pi_coeff(x, z) + distance_pi_coeff(z, y);
                }
            }
        }
        report.check(
            "metric-axioms",
            format!("{} sample points", points.len()),
            verdict(all_ok, "symmetry and triangle inequality, exact coefficients"),
        );
    }

    report.finish()
}

pub fn freegroup_suite(cfg: &WorkbenchConfig) -> SuiteReport {
    let mut report = SuiteReport::new("freegroup");
    let mut lcg = Lcg::new(cfg.seed ^ 0xF00D);

    // reduction: idempotent, length non-increasing, agrees with the naive
    // cancel-first-pair reducer
    {
        fn naive(mut letters: Vec<(u32, i8)>) -> Vec<(u32, i8)> {
            loop {
                let mut hit = None;
                for i in 0..letters.len().saturating_sub(1) {
                    if letters[i].0 == letters[i + 1].0 && letters[i].1 == -letters[i + 1].1 {
                        hit = Some(i);
                        break;
                    }
                }
                match hit {
                    Some(i) => {
                        letters.drain(i..=i + 1);
                    }
                    None => return letters,
                }
            }
        }
        let rounds = 10_000u32;
        let mut all_ok = true;
        for _ in 0..rounds {
            let len = lcg.range(0, 20) as usize;
            let letters: Vec<(u32, i8)> = (0..len)
                .map(|_| {
                    (
                        lcg.range(1, 3) as u32,
                        if lcg.below(2) == 0 { 1 } else { -1 },
                    )
                })
                .collect();
            let reduced = reduce(&letters);
            all_ok &= reduced.letters() == naive(letters.clone());
            all_ok &= reduced.len() <= letters.len();
            all_ok &= reduce(reduced.letters()) == reduced;
        }
        report.check(
            "reduce-retraction",
            format!("{rounds} random words, rank 3"),
            verdict(all_ok, "idempotent and equal to the naive reducer"),
        );
    }

    // abelianization is a homomorphism
    {
        let mut all_ok = true;
        for _ in 0..2000 {
            let make = |lcg: &mut Lcg| {
                let len = lcg.range(0, 10) as usize;
                reduce(
                    &(0..len)
                        .map(|_| {
                            (
                                lcg.range(1, 3) as u32,
                                if lcg.below(2) == 0 { 1i8 } else { -1 },
                            )
                        })
                        .collect::<Vec<_>>(),
                )
            };
            let u = make(&mut lcg);
            let v = make(&mut lcg);
            let sum = abelianize(&u, 3)
                .unwrap()
                .add(&abelianize(&v, 3).unwrap());
            all_ok &= abelianize(&u.mul(&v), 3).unwrap() == sum;
        }
        report.check(
            "abelianize-homomorphism",
            "2000 random pairs, rank 3".into(),
            verdict(all_ok, "ab(uv) = ab(u) + ab(v)"),
        );
    }

    // commutator powers and the single-commutator search
    {
        let a = Word::generator(1);
        let b = Word::generator(2);
        let c1 = commutator_power(&a, &b, 1);
        let c2 = commutator_power(&a, &b, 2);
        let mut all_ok = c1.to_string() == "abAB";
        all_ok &= abelianize(&c2, 2).unwrap().is_zero();
        let witness = single_commutator(&c1);
        all_ok &= match &witness {
            Some(w) => crate::freegroup::commutator(&w.x, &w.y) == c1,
            None => false,
        };
        all_ok &= single_commutator(&c2).is_none();
        all_ok &= single_commutator(&"aab".parse::<Word>().unwrap()).is_none();
        report.check(
            "single-commutator",
            "[a,b] and [a,b]^2".into(),
            verdict(
                all_ok,
                "[a,b] has a verified witness; [a,b]^2 admits no decomposition",
            ),
        );
    }

    // every found witness has zero abelianization
    {
        let mut all_ok = true;
        for text in ["abAB", "abABabAB", "aabABA", "abab", "aabb"] {
            let w: Word = text.parse().unwrap();
            if let Some(witness) = single_commutator(&w) {
                let rank = w.max_generator().max(2);
                all_ok &= abelianize(&w, rank).unwrap().is_zero();
                all_ok &= crate::freegroup::commutator(&witness.x, &witness.y) == w;
            }
        }
        report.check(
            "witness-implies-commutator-subgroup",
            "fixed word panel".into(),
            verdict(all_ok, "positives have zero abelianization and verify"),
        );
    }

    report.finish()
}

fn random_affine_chain(lcg: &mut Lcg, dim: usize, terms: usize) -> Chain {
    let mut chain = Chain::zero(dim);
    let mut out = Vec::new();
    for _ in 0..terms {
        let vertices: Vec<QPoint> = (0..=dim)
            .map(|_| {
                QPoint(vec![
                    rat(lcg.range(-8, 8), lcg.range(1, 3)),
                    rat(lcg.range(-8, 8), lcg.range(1, 3)),
                ])
            })
            .collect();
        let coeff = lcg.range(-2, 2);
        if coeff != 0 {
            out.push((AffineSimplex::new(vertices), coeff));
        }
    }
    for (s, c) in out {
        chain = chain.add(&Chain::from_terms(dim, [(s, c)]).unwrap());
    }
    chain
}

pub fn chains_suite(cfg: &WorkbenchConfig) -> SuiteReport {
    let mut report = SuiteReport::new("chains");
    let mut lcg = Lcg::new(cfg.seed ^ 0xC0FFEE);

    {
        let mut all_ok = true;
        for _ in 0..60 {
            let dim = lcg.range(1, 3) as usize;
            let c = random_affine_chain(&mut lcg, dim, 3);
            all_ok &= boundary(&boundary(&c)).is_zero();
        }
        report.check(
            "boundary-squared",
            "60 random chains, dim 1..3".into(),
            verdict(all_ok, "b(bc) = 0"),
        );
    }

    {
        let mut all_ok = true;
        for _ in 0..40 {
            let dim = lcg.range(1, 2) as usize;
            let c = random_affine_chain(&mut lcg, dim, 3);
            for m in 0..=2 {
                all_ok &= boundary(&subdivide(&c, m)) == subdivide(&boundary(&c), m);
            }
        }
        report.check(
            "subdivision-boundary-commute",
            "40 random chains, m = 0..2".into(),
            verdict(all_ok, "b(sd^m c) = sd^m(b c)"),
        );
    }

    {
        let mut all_ok = true;
        for _ in 0..40 {
            let dim = lcg.range(0, 2) as usize;
            let c = random_affine_chain(&mut lcg, dim, 3);
            for m in 0..=2 {
                let lhs = boundary(&subdiv_homotopy(&c, m)).add(&subdiv_homotopy(&boundary(&c), m));
                all_ok &= lhs == subdivide(&c, m).sub(&c);
            }
        }
        report.check(
            "subdivision-homotopy",
            "40 random chains, m = 0..2".into(),
            verdict(all_ok, "b(D_m c) + D_m(b c) = sd^m c - c"),
        );
    }

    {
        let f = AffineMap {
            linear: vec![
                vec![rat(1, 2), int(3)],
                vec![int(-1), rat(1, 3)],
                vec![int(2), int(0)],
            ],
            translation: vec![int(1), rat(-1, 2), int(0)],
        };
        let mut all_ok = true;
        for _ in 0..20 {
            let c = random_affine_chain(&mut lcg, 1, 3);
            for m in 0..=2 {
                all_ok &= push_forward(&f, &subdiv_homotopy(&c, m))
                    == subdiv_homotopy(&push_forward(&f, &c), m);
            }
        }
        report.check(
            "homotopy-naturality",
            "20 random chains under an affine map to Q^3".into(),
            verdict(all_ok, "f# D_m = D_m f#"),
        );
    }

    {
        let mut all_ok = true;
        for _ in 0..40 {
            let dim = lcg.range(0, 2) as usize;
            let c = random_affine_chain(&mut lcg, dim, 3);
            let lhs = boundary(&prism(&c)).add(&prism(&boundary(&c)));
            let rhs = cylinder_end(&c, &int(1)).sub(&cylinder_end(&c, &int(0)));
            all_ok &= lhs == rhs;
        }
        report.check(
            "prism-identity",
            "40 random chains, dim 0..2".into(),
            verdict(all_ok, "bK(c) + K(bc) = top - bottom"),
        );
    }

    {
        // cone fillings of random cycles: boundaries of random chains
        let mut all_ok = true;
        let mut count = 0;
        for _ in 0..30 {
            let c = random_affine_chain(&mut lcg, 2, 2);
            let cycle = boundary(&c);
            if cycle.is_zero() {
                continue;
            }
            count += 1;
            let phi = Contraction::straight_line(QPoint(vec![int(0), int(0)]), int(2));
            let filled = cone_fill(&cycle, &phi).unwrap();
            all_ok &= boundary(&filled) == cycle;
            let bound = int(2) * &phi.gamma * cycle.im_diameter();
            all_ok &= filled.im_diameter() <= bound;
        }
        report.check(
            "cone-fill",
            format!("{count} random 1-cycles"),
            verdict(all_ok, "b(fill) = cycle and diam <= 2*gamma*diam"),
        );
    }

    {
        let point = complex_from_top_simplices(&[vec![0]]);
        let circle = complex_from_top_simplices(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let wedge = complex_from_top_simplices(&[
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![0, 3],
            vec![3, 4],
            vec![0, 4],
        ]);
        let hp = homology(&point).unwrap();
        let hc = homology(&circle).unwrap();
        let hw = homology(&wedge).unwrap();
        let all_ok = hp.len() == 1
            && hp[0].betti == 1
            && hc[0].betti == 1
            && hc[1].betti == 1
            && hw[1].betti == 2
            && hw.iter().all(|g| g.torsion.is_empty());
        report.check(
            "homology-fixtures",
            "point, circle, wedge of two circles".into(),
            verdict(all_ok, "H0 = Z; H1(circle) = Z; H1(wedge) = Z^2"),
        );
    }

    report.finish()
}

fn random_hawaiian_current(
    lcg: &mut Lcg,
    graph: &MetricGraph,
    cycles_only: bool,
) -> GraphCurrent1 {
    let mut pieces = Vec::new();
    let count = lcg.range(1, 3);
    for _ in 0..count {
        let edge = lcg.below(graph.edge_count() as u64) as usize;
        let w = if lcg.below(2) == 0 { 1 } else { -1 } * lcg.range(1, 3);
        if cycles_only {
            pieces.push((edge, int(0), int(1), w));
        } else {
            let a = rat(lcg.range(0, 7), 8);
            let b = rat(lcg.range(1, 8), 8);
            if a < b {
                pieces.push((edge, a, b, w));
            } else if b < a {
                pieces.push((edge, b, a, w));
            }
        }
    }
    GraphCurrent1::from_raw(graph, pieces).unwrap()
}

pub fn currents_suite(cfg: &WorkbenchConfig) -> SuiteReport {
    let mut report = SuiteReport::new("currents");
    let mut lcg = Lcg::new(cfg.seed ^ 0x5EA5);
    let model = MetricGraph::hawaiian_model(cfg.max_circle_index.clamp(2, 6));

    // slice: dual defining forms agree on random (T, r)
    {
        let mut all_ok = true;
        let mut tried = 0;
        while tried < 10 {
            let t = random_hawaiian_current(&mut lcg, &model, false);
            if t.is_zero() {
                continue;
            }
            let center = GraphPoint::Vertex(0);
            let r = rat(lcg.range(1, 15), 32);
            let Ok(slice) = t.slice(&model, &center, &r) else {
                continue;
            };
            tried += 1;
            let over = model.sublevel_arcs(&center, &r).complement();
            let dual = t
                .boundary(&model)
                .restrict_superlevel(&model, &center, &r)
                .sub(&t.restrict(&model, &over).boundary(&model));
            all_ok &= dual == slice;
            for (p, _) in slice.masses() {
                all_ok &= model.point_distance(&center, p) == r;
            }
        }
        report.check(
            "slice-defining-identity",
            "10 generic random (T, r)".into(),
            verdict(all_ok, "both restriction forms agree; support on the level set"),
        );
    }

    // (iₙ pₙ)# T = T ⌊ Lₙ and boundary naturality
    {
        let mut all_ok = true;
        for _ in 0..10 {
            let t = random_hawaiian_current(&mut lcg, &model, false);
            for edge in 0..model.edge_count() {
                let map = GraphMap::collapse_all_but(&model, edge);
                let pushed = t.push_forward(&map, &model, &model).unwrap();
                let mut arcs = crate::currents::ArcSet::empty(&model);
                arcs.per_edge[edge] = vec![(int(0), int(1))];
                all_ok &= pushed == t.restrict(&model, &arcs);
                all_ok &= pushed.boundary(&model)
                    == t.boundary(&model).push_forward(&map, &model);
            }
        }
        report.check(
            "projection-restriction",
            "10 random currents, all circles".into(),
            verdict(all_ok, "(i_n p_n)# T = T|L_n and boundary commutes"),
        );
    }

    // mass: additivity over the circle decomposition
    {
        let mut all_ok = true;
        for _ in 0..10 {
            let t = random_hawaiian_current(&mut lcg, &model, false);
            let total = t.mass_scale_units(&model);
            let mut sum = Rational::zero();
            for edge in 0..model.edge_count() {
                let mut arcs = crate::currents::ArcSet::empty(&model);
                arcs.per_edge[edge] = vec![(int(0), int(1))];
                sum += t.restrict(&model, &arcs).mass_scale_units(&model);
            }
            all_ok &= sum == total;
        }
        report.check(
            "mass-subadditivity",
            "10 random currents on the bouquet".into(),
            verdict(all_ok, "mass splits over circles with equality"),
        );
    }

    // PL Stokes and subdivision invariance
    {
        let mut all_ok = true;
        for _ in 0..10 {
            let edge = lcg.below(model.edge_count() as u64) as usize;
            let to = rat(lcg.range(1, 8), 8);
            let path = GraphPath::new(
                &model,
                vec![PathStep {
                    edge,
                    from: int(0),
                    to,
                }],
            )
            .unwrap();
            let c = GraphChain1::from_terms([(path, lcg.range(-3, 3))]);
            all_ok &= c.boundary(&model).to_current() == c.to_current(&model).boundary(&model);
            all_ok &= c.subdivide(&model, 3).to_current(&model) == c.to_current(&model);
        }
        report.check(
            "chain-current-bridge",
            "10 random PL chains".into(),
            verdict(all_ok, "[bc] = d[c] and [sd^3 c] = [c]"),
        );
    }

    // representation round trip with certificates
    {
        let mut all_ok = true;
        let mut cases = 0;
        let graphs: Vec<(MetricGraph, Rational)> = vec![
            (MetricGraph::circle(int(1)), rat(1, 3)),
            (
                MetricGraph::tree(3, 0, vec![(0, 1, int(1)), (1, 2, int(1))]).unwrap(),
                rat(1, 2),
            ),
            (model.clone(), int(1)),
        ];
        for (graph, epsilon) in &graphs {
            for _ in 0..2 {
                let t = if graph.is_hawaiian_model() {
                    random_hawaiian_current(&mut lcg, graph, true)
                } else {
                    let to = rat(lcg.range(1, 4), 4);
                    let path = GraphPath::new(
                        graph,
                        vec![PathStep {
                            edge: 0,
                            from: int(0),
                            to,
                        }],
                    )
                    .unwrap();
                    GraphChain1::from_terms([(path, lcg.range(1, 2))]).to_current(graph)
                };
                if t.is_zero() {
                    continue;
                }
                cases += 1;
                match current_to_chain1(graph, &t, epsilon) {
                    Ok((chain, certs)) => {
                        all_ok &= chain.to_current(graph) == t;
                        all_ok &= certs.all_pass();
                    }
                    Err(_) => all_ok = false,
                }
            }
        }
        report.check(
            "representation-round-trip",
            format!("{cases} currents over circle, tree, bouquet"),
            verdict(all_ok, "[c] = T exactly with passing certificates"),
        );
    }

    // divisibility probe
    {
        let mut all_ok = true;
        for _ in 0..10 {
            let t = random_hawaiian_current(&mut lcg, &model, true);
            let v = winding_vector(&model, &t).unwrap();
            let max_entry = v.values().map(|w| w.abs()).max().unwrap_or(0);
            let divisors: Vec<i64> = (2..=max_entry + 1).collect();
            if crate::currents::represent::divisible_by_all(&v, &divisors) {
                all_ok &= t.is_zero();
            }
        }
        report.check(
            "divisibility-probe",
            "10 random cycles; K = {2..max+1}".into(),
            verdict(all_ok, "surviving the probe forces the zero current"),
        );
    }

    report.finish()
}

/// Runs one named suite, or all of them.
pub fn run_suite(name: &str, cfg: &WorkbenchConfig) -> Option<Vec<SuiteReport>> {
    match name {
        "seqorder" => Some(vec![seqorder_suite(cfg)]),
        "earring" => Some(vec![earring_suite(cfg)]),
        "freegroup" => Some(vec![freegroup_suite(cfg)]),
        "chains" => Some(vec![chains_suite(cfg)]),
        "currents" => Some(vec![currents_suite(cfg)]),
        "all" => Some(vec![
            seqorder_suite(cfg),
            earring_suite(cfg),
            freegroup_suite(cfg),
            chains_suite(cfg),
            currents_suite(cfg),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_defaults() {
        let cfg = WorkbenchConfig::default();
        for report in run_suite("all", &cfg).unwrap() {
            assert!(
                report.pass,
                "suite {} failed: {:?}",
                report.suite,
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .collect::<Vec<_>>()
            );
            // canonical ordering
            let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
            let mut sorted = ids.clone();
            sorted.sort();
            assert_eq!(ids, sorted);
        }
        assert!(run_suite("nonsense", &cfg).is_none());
    }

    #[test]
    fn injected_failure_flips_the_pass_flag() {
        let cfg = WorkbenchConfig::default();
        let mut report = seqorder_suite(&cfg);
        assert!(report.pass);
        report.inject_failure("zz-injected");
        assert!(!report.pass);
        let v = report.to_json();
        assert_eq!(v["pass"], serde_json::json!(false));
    }
}
