//! Demo gallery and the randomized closure check.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use normdecomp::constructions::{cantor_coarsen, coarse_projection, minf_sample, row_isometry, MinfRule};
use normdecomp::decomposition::{hook, hook_sequence, membership, MembershipVerdict};
use normdecomp::model::{BasisIndex, BlockId, ExplicitOperator, OperatorRep, Partition};
use normdecomp::Result;

const EPS: f64 = 1e-6;
const HORIZON: usize = 32;
const DEPTH: usize = 64;

pub type Check = (bool, String);

/// Prints one PASS/FAIL line per check and returns the exit code.
pub fn report(checks: &[Check], out: &mut String) -> i32 {
    for (ok, what) in checks {
        writeln!(out, "{} {what}", if *ok { "PASS" } else { "FAIL" }).unwrap();
    }
    if checks.iter().all(|c| c.0) {
        crate::EXIT_OK
    } else {
        crate::EXIT_CHECK_FAILED
    }
}

fn is_in(v: &MembershipVerdict) -> bool {
    matches!(v, MembershipVerdict::CertifiedIn { .. })
}

fn is_out(v: &MembershipVerdict, eps: f64) -> bool {
    matches!(v, MembershipVerdict::CertifiedOut { eps: e, .. } if *e == eps)
}

/// `q_0 a = a` for the row isometry `a`, `a` is out and `q_0` is in.
pub fn not_ideal() -> Result<Vec<Check>> {
    let coarse = cantor_coarsen(Partition::atomic());
    let a = row_isometry(Complex64::new(0.75, 0.0), &coarse)?;
    let q0 = coarse_projection(&coarse, BlockId(0))?;
    let qa = q0.mul(&a)?;

    let idx = coarse.truncated_support((0..4).map(BlockId), DEPTH);
    let cols = coarse.truncated_support((0..DEPTH).map(BlockId), 1);
    let mut checked = 0;
    let mut equal = true;
    for &r in &idx {
        for &c in idx.iter().chain(&cols) {
            equal &= qa.entry_at(r, c) == a.entry_at(r, c);
            checked += 1;
        }
    }
    let va = membership(&a, &coarse, EPS, HORIZON, DEPTH)?;
    let vq = membership(&q0, &coarse, EPS, HORIZON, DEPTH)?;
    Ok(vec![
        (equal, format!("q0*a = a entrywise ({checked} entries, depth {DEPTH})")),
        (is_out(&va, 0.75), format!("membership(a) = {va}")),
        (is_in(&vq), format!("membership(q0) = {vq}")),
    ])
}

/// `q_0` is in over the coarse partition and out over the fine one.
pub fn partitions_differ() -> Result<Vec<Check>> {
    let fine = Partition::atomic();
    let coarse = cantor_coarsen(fine.clone());
    let q0 = coarse_projection(&coarse, BlockId(0))?;
    let vc = membership(&q0, &coarse, EPS, HORIZON, DEPTH)?;
    let vf = membership(&q0, &fine, EPS, HORIZON, DEPTH)?;
    Ok(vec![
        (is_in(&vc), format!("membership(q0, {coarse}) = {vc}")),
        (is_out(&vf, 1.0), format!("membership(q0, {fine}) = {vf}")),
    ])
}

/// The geometric sample is in, its first hook is `(1 + sqrt 5)/4` and the
/// hooks decrease strictly.
pub fn minf() -> Result<Vec<Check>> {
    let part = Partition::atomic();
    let a = minf_sample(MinfRule::Geometric { base: 0.5 })?;
    let v = membership(&a, &part, EPS, HORIZON, DEPTH)?;
    let hooks = hook_sequence(&a, &part, 9, DEPTH)?;
    let h1 = hooks[1].bound.lower;
    let golden = (1.0 + 5f64.sqrt()) / 4.0;
    let decreasing = hooks[1..].windows(2).all(|w| w[1].bound.lower < w[0].bound.lower);
    Ok(vec![
        (is_in(&v), format!("membership(geometric 0.5) = {v}")),
        ((h1 - golden).abs() <= 1e-8, format!("hook 1 lower = {h1}")),
        (decreasing, "hook lower bounds strictly decreasing for 1 <= i <= 8".to_string()),
    ])
}

fn random_explicit(rng: &mut ChaCha8Rng) -> OperatorRep {
    let mut seen = std::collections::BTreeSet::new();
    let count = rng.random_range(1..=12);
    let mut entries = Vec::new();
    for _ in 0..count {
        let pos = (rng.random_range(0..16), rng.random_range(0..16));
        if seen.insert(pos) {
            let v = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            entries.push((BasisIndex(pos.0), BasisIndex(pos.1), v));
        }
    }
    ExplicitOperator::new(entries).expect("positions are distinct").into()
}

/// Hooks vanish past the support and the membership verdict is certified in.
fn certified_member(op: &OperatorRep, part: &Partition) -> Result<bool> {
    let e = op.as_explicit().expect("explicit arithmetic stays explicit");
    let (extent, depth) = (e.block_extent(part), e.covering_depth(part));
    let hooks = hook_sequence(op, part, extent + 2, depth)?;
    let vanish = hooks[extent..].iter().all(|h| h.bound.lower == 0.0 && h.bound.upper == Some(0.0));
    Ok(vanish && is_in(&membership(op, part, EPS, extent + 2, depth)?))
}

fn same_entries(a: &OperatorRep, b: &OperatorRep) -> bool {
    let (a, b) = (a.as_explicit().unwrap(), b.as_explicit().unwrap());
    a.len() == b.len() && a.entries().all(|(r, c, v)| (b.get(r, c) - v).norm() <= 1e-12)
}

fn closure_trial(rng: &mut ChaCha8Rng) -> Result<bool> {
    let part = Partition::uniform(rng.random_range(1..=3)).expect("positive width");
    let a = random_explicit(rng);
    let b = random_explicit(rng);
    let sum = a.add(&b);
    let prod = a.mul(&b)?;
    let mut ok = true;
    for op in [&sum, &prod, &a.adjoint(), &b.adjoint()] {
        ok &= certified_member(op, &part)?;
    }
    // (ab)* = b* a* and a** = a
    ok &= same_entries(&prod.adjoint(), &b.adjoint().mul(&a.adjoint())?);
    ok &= a.adjoint().adjoint().as_explicit() == a.as_explicit();
    Ok(ok)
}

/// Product of two geometric samples: every hook up to the horizon stays
/// below the product's tail bound, which decreases to zero.
fn product_domination(out: &mut String) -> Result<bool> {
    let part = Partition::atomic();
    let (ba, bb) = (0.5, 0.6);
    let a = minf_sample(MinfRule::Geometric { base: ba })?;
    let b = minf_sample(MinfRule::Geometric { base: bb })?;
    let ab = a.mul(&b)?;
    let tail = ab.tail_bound().expect("both factors carry tail bounds");
    writeln!(out, "# hooks of geometric({ba}) * geometric({bb}) against {}", tail.description()).unwrap();
    writeln!(out, "i\thook_lower\tdominating").unwrap();
    let mut ok = tail.decay_from().is_some();
    for i in 0..HORIZON {
        let h = hook(&ab, &part, BlockId(i), DEPTH)?;
        let dom = tail.at(part.first_index(BlockId(i)).0);
        ok &= h.bound.lower <= dom;
        writeln!(out, "{i}\t{}\t{dom}", h.bound.lower).unwrap();
    }
    let start = tail.decay_from().unwrap_or(0);
    ok &= (start..start + 256).all(|n| tail.at(n + 1) <= tail.at(n));
    Ok(ok)
}

/// Seeded closure trials plus the product domination table.
pub fn closure(trials: usize, seed: u64, out: &mut String) -> Result<i32> {
    let dominated = product_domination(out)?;
    writeln!(out, "{} product hooks dominated", if dominated { "PASS" } else { "FAIL" }).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0;
    for t in 0..trials {
        if closure_trial(&mut rng)? {
            passed += 1;
        } else {
            writeln!(out, "FAIL trial {t}").unwrap();
        }
    }
    writeln!(out, "PASS {passed}/{trials}").unwrap();
    Ok(if dominated && passed == trials {
        crate::EXIT_OK
    } else {
        crate::EXIT_CHECK_FAILED
    })
}
