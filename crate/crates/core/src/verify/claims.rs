use super::{
    ensure_within, run_jobs, simplex_len, Bounds, Claim, IdealSide, Tally, VerifyOptions, Witness,
};
use crate::endo::{Endo, SimplexSpec};
use crate::enumeration::{
    catalan, count, enumerate_simplex, enumerate_subset, in_dcap, simplex_size, SubsetSelector,
};
use crate::error::Result;
use crate::projection::{project_then_project, ProjectionSpec};
use crate::runs::{add_via_prefix_mins, compose_via_runs};

pub(super) struct Outcome {
    pub tally: Tally,
    pub notes: Vec<String>,
}

impl From<Tally> for Outcome {
    fn from(tally: Tally) -> Self {
        Self {
            tally,
            notes: Vec::new(),
        }
    }
}

pub(super) fn run(claim: Claim, bounds: &Bounds, opts: &VerifyOptions) -> Result<Outcome> {
    let cap = opts.max_witnesses;
    let ceiling = opts.ceiling;
    match claim {
        Claim::PrefixMinAddition => {
            let jobs = bounds.simplices(1);
            ensure_within(jobs.iter().map(|s| simplex_len(s).pow(2)).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, prefix_min_addition).into())
        }
        Claim::ComposeRuns => {
            let jobs = bounds.simplices(1);
            ensure_within(jobs.iter().map(|s| simplex_len(s).pow(2)).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, compose_runs).into())
        }
        Claim::SemiringAxioms => {
            let jobs = bounds.simplices(1);
            ensure_within(jobs.iter().map(|s| simplex_len(s).pow(3)).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, semiring_axioms).into())
        }
        Claim::ProjectionClamp => {
            let jobs = projection_jobs(bounds);
            ensure_within(jobs.iter().map(|d| simplex_len(d.simplex())).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, projection_clamp).into())
        }
        Claim::Additivity
        | Claim::SClosed
        | Claim::RClosed
        | Claim::DClosed
        | Claim::Leibniz
        | Claim::Maximality
        | Claim::LeibnizInequality => {
            let jobs = projection_jobs(bounds);
            ensure_within(
                jobs.iter().map(|d| simplex_len(d.simplex()).pow(2)).sum(),
                ceiling,
            )?;
            let check: fn(&ProjectionSpec, &mut Tally) = match claim {
                Claim::Additivity => additivity,
                Claim::SClosed => |d, t| closure(d, t, Subset::S),
                Claim::RClosed => |d, t| closure(d, t, Subset::R),
                Claim::DClosed => |d, t| closure(d, t, Subset::D),
                Claim::Leibniz => leibniz_on_d,
                Claim::Maximality => maximality,
                _ => leibniz_inequality,
            };
            let mut outcome = Outcome::from(run_jobs(&jobs, cap, check));
            outcome
                .notes
                .push(format!("{} (simplex, l, m) instances", jobs.len()));
            Ok(outcome)
        }
        Claim::LeftIdeal => {
            let jobs = projection_jobs(bounds);
            ensure_within(
                jobs.iter()
                    .map(|d| simplex_len(d.simplex()).pow(2) * (d.upper() - d.lower()) as u128)
                    .sum(),
                ceiling,
            )?;
            Ok(run_jobs(&jobs, cap, left_ideal).into())
        }
        Claim::CompositionBottom | Claim::CompositionTop => {
            let jobs = bounds.simplices(3);
            ensure_within(
                jobs.iter()
                    .map(|s| simplex_len(s) * (s.k() * s.k()) as u128)
                    .sum(),
                ceiling,
            )?;
            let check = if claim == Claim::CompositionBottom {
                composition_bottom
            } else {
                composition_top
            };
            Ok(run_jobs(&jobs, cap, check).into())
        }
        Claim::TopSingleton => {
            let jobs = bounds.simplices(2);
            ensure_within(jobs.iter().map(simplex_len).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, top_singleton).into())
        }
        Claim::TopInclusion => {
            let jobs = bounds.simplices(4);
            ensure_within(
                jobs.iter()
                    .map(|s| simplex_len(s) * (s.k() * s.k()) as u128)
                    .sum(),
                ceiling,
            )?;
            let tally = run_jobs(&jobs, cap, top_inclusion);
            // strictness is reported, not asserted
            let (mut strict, mut pairs) = (0usize, 0usize);
            for s in &jobs {
                let k = s.k();
                for lower in 1..k - 1 {
                    for lower1 in lower + 1..k - 1 {
                        pairs += 1;
                        let wide = top_s_count(s, lower).expect("valid range");
                        let narrow = top_s_count(s, lower1).expect("valid range");
                        if wide > narrow {
                            strict += 1;
                        }
                    }
                }
            }
            Ok(Outcome {
                tally,
                notes: vec![format!(
                    "inclusion strict for {strict} of {pairs} (A, l, l1) triples"
                )],
            })
        }
        Claim::TopDisjoint => {
            let jobs = bounds.simplices(3);
            ensure_within(
                jobs.iter()
                    .map(|s| simplex_len(s) * (s.k() * s.k()) as u128)
                    .sum(),
                ceiling,
            )?;
            Ok(run_jobs(&jobs, cap, top_disjoint).into())
        }
        Claim::TopIntersection => {
            let jobs = bounds.simplices(3);
            ensure_within(
                jobs.iter().map(|s| simplex_len(s) * s.k() as u128).sum(),
                ceiling,
            )?;
            Ok(run_jobs(&jobs, cap, top_intersection).into())
        }
        Claim::NilpotentClosed => {
            let sizes: Vec<usize> = bounds.chain_sizes().filter(|&n| n >= 3).collect();
            ensure_within(
                sizes.iter().map(|&n| simplex_size(n, n) * n as u128).sum(),
                ceiling,
            )?;
            Ok(run_jobs(&sizes, cap, corollary_n_closed).into())
        }
        Claim::CountOn | Claim::CountN => {
            let sizes: Vec<usize> = bounds.chain_sizes().collect();
            ensure_within(sizes.iter().map(|&n| simplex_size(n, n)).sum(), ceiling)?;
            let on = claim == Claim::CountOn;
            Ok(run_jobs(&sizes, cap, |&n, t| catalan_count(n, on, ceiling, t)).into())
        }
        Claim::NIdeal => {
            let sizes: Vec<usize> = bounds.chain_sizes().collect();
            ensure_within(
                sizes.iter().map(|&n| simplex_size(n, n).pow(2)).sum(),
                ceiling,
            )?;
            Ok(run_jobs(&sizes, cap, |&n, t| {
                let sub = SubsetSelector::N { n };
                let members: Vec<Endo> = enumerate_subset(&sub).expect("n >= 1").collect();
                let hosts: Vec<Endo> = enumerate_subset(&SubsetSelector::On { n })
                    .expect("n >= 1")
                    .collect();
                *t = ideal_tally(&sub, &members, &hosts, IdealSide::TwoSided, cap);
            })
            .into())
        }
        Claim::NilpotentPowers => {
            let sizes: Vec<usize> = bounds.chain_sizes().collect();
            ensure_within(
                sizes.iter().map(|&n| simplex_size(n, n) * n as u128).sum(),
                ceiling,
            )?;
            Ok(run_jobs(&sizes, cap, nilpotent_powers).into())
        }
        Claim::PropSpCount => {
            let jobs: Vec<(usize, usize)> = bounds
                .chain_sizes()
                .flat_map(|n| (1..n.saturating_sub(1)).map(move |p| (n, p)))
                .filter(|&(_, p)| bounds.p.is_none_or(|want| want == p))
                .collect();
            ensure_within(jobs.iter().map(|&(n, _)| simplex_size(n, n)).sum(), ceiling)?;
            Ok(run_jobs(&jobs, cap, |&(n, p), t| {
                let sel = SubsetSelector::TopRuns { n, p };
                let found = count(&sel, ceiling).expect("checked against the ceiling");
                let expected = p as u128 * catalan(p as u64);
                t.check(found == expected, || {
                    Witness::new(n)
                        .param("p", p as u128)
                        .param("count", found)
                        .param("expected", expected)
                });
            })
            .into())
        }
    }
}

fn projection_jobs(bounds: &Bounds) -> Vec<ProjectionSpec> {
    let mut jobs = Vec::new();
    for simplex in bounds.simplices(2) {
        let k = simplex.k();
        for lower in 0..k {
            for upper in lower + 1..k {
                if bounds.projection_allowed(lower, upper) {
                    jobs.push(
                        ProjectionSpec::new(simplex.clone(), lower, upper).expect("l < m <= k-1"),
                    );
                }
            }
        }
    }
    jobs
}

fn elements(simplex: &SimplexSpec) -> Vec<Endo> {
    enumerate_simplex(simplex).collect()
}

fn projection_witness(d: &ProjectionSpec) -> Witness {
    Witness::in_simplex(d.simplex())
        .param("l", d.lower() as u128)
        .param("m", d.upper() as u128)
}

fn prefix_min_addition(simplex: &SimplexSpec, t: &mut Tally) {
    let all = elements(simplex);
    let forms: Vec<_> = all
        .iter()
        .map(|a| {
            a.runs_relative_to(simplex.vertices())
                .expect("element of σ(A)")
        })
        .collect();
    for (a, fa) in all.iter().zip(&forms) {
        for (b, fb) in all.iter().zip(&forms) {
            let via_runs = add_via_prefix_mins(fa, fb)
                .expect("same vertex set")
                .to_endo();
            let pointwise = a.join(b);
            t.check(via_runs == pointwise, || {
                Witness::in_simplex(simplex)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("prefix_mins", &via_runs)
                    .endo("pointwise", &pointwise)
            });
        }
    }
}

fn compose_runs(simplex: &SimplexSpec, t: &mut Tally) {
    let all = elements(simplex);
    for a in &all {
        let fa = a
            .runs_relative_to(simplex.vertices())
            .expect("element of σ(A)");
        for b in &all {
            let via_runs = compose_via_runs(&fa, b, simplex.vertices()).map(|f| f.to_endo());
            let pointwise = a.then(b);
            t.check(via_runs.as_ref() == Ok(&pointwise), || {
                let w = Witness::in_simplex(simplex)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("pointwise", &pointwise);
                match &via_runs {
                    Ok(e) => w.endo("block_sums", e),
                    Err(err) => w.note(err.to_string()),
                }
            });
        }
    }
}

fn semiring_axioms(simplex: &SimplexSpec, t: &mut Tally) {
    let all = elements(simplex);
    for x in &all {
        for y in &all {
            let (sum_xy, prod_xy) = (x.join(y), x.then(y));
            for z in &all {
                let mut failed = Vec::new();
                if sum_xy != y.join(x) {
                    failed.push("+ commutative");
                }
                if x.join(x) != *x {
                    failed.push("+ idempotent");
                }
                if sum_xy.join(z) != x.join(&y.join(z)) {
                    failed.push("+ associative");
                }
                if prod_xy.then(z) != x.then(&y.then(z)) {
                    failed.push("· associative");
                }
                if sum_xy.then(z) != x.then(z).join(&y.then(z)) {
                    failed.push("(x+y)z = xz+yz");
                }
                if x.then(&y.join(z)) != prod_xy.join(&x.then(z)) {
                    failed.push("x(y+z) = xy+xz");
                }
                if !simplex.contains(&sum_xy) || !simplex.contains(&prod_xy) {
                    failed.push("closure");
                }
                t.check(failed.is_empty(), || {
                    Witness::in_simplex(simplex)
                        .endo("x", x)
                        .endo("y", y)
                        .endo("z", z)
                        .note(failed.join(", "))
                });
            }
        }
    }
}

fn projection_clamp(d: &ProjectionSpec, t: &mut Tally) {
    let target = d.image_simplex();
    for a in enumerate_simplex(d.simplex()) {
        let merged = d.project(&a).expect("element of σ(A)");
        let clamped = d.clamp_unchecked(&a);
        let ok = merged == clamped
            && target.contains(&merged)
            && d.project(&merged).as_ref() == Ok(&merged);
        t.check(ok, || {
            projection_witness(d)
                .endo("alpha", &a)
                .endo("run_merge", &merged)
                .endo("clamp", &clamped)
        });
    }
}

fn additivity(d: &ProjectionSpec, t: &mut Tally) {
    let all = elements(d.simplex());
    let projected: Vec<Endo> = all.iter().map(|a| d.project(a).expect("in σ(A)")).collect();
    for (a, pa) in all.iter().zip(&projected) {
        for (b, pb) in all.iter().zip(&projected) {
            let lhs = d.project(&a.join(b)).expect("σ(A) is closed under +");
            let rhs = pa.join(pb);
            t.check(lhs == rhs, || {
                projection_witness(d)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("lhs", &lhs)
                    .endo("rhs", &rhs)
            });
        }
    }
}

#[derive(Clone, Copy)]
enum Subset {
    S,
    R,
    D,
}

fn closure(d: &ProjectionSpec, t: &mut Tally, subset: Subset) {
    let all = elements(d.simplex());
    let member = |a: &Endo| {
        let m = d.membership_unchecked(a);
        match subset {
            Subset::S => m.in_s,
            Subset::R => m.in_r,
            Subset::D => m.in_d(),
        }
    };
    if let Subset::D = subset {
        for a in &all {
            let m = d.membership_unchecked(a);
            t.check(!m.in_both(), || {
                projection_witness(d)
                    .endo("alpha", a)
                    .note("in both S and R")
            });
        }
    }
    let members: Vec<&Endo> = all.iter().filter(|a| member(a)).collect();
    for &a in &members {
        for &b in &members {
            let (sum, product) = (a.join(b), a.then(b));
            let ok = member(&sum) && member(&product);
            t.check(ok, || {
                projection_witness(d)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("sum", &sum)
                    .endo("product", &product)
            });
        }
    }
}

fn members_of_d(d: &ProjectionSpec) -> Vec<Endo> {
    enumerate_simplex(d.simplex())
        .filter(|a| d.membership_unchecked(a).in_d())
        .collect()
}

fn leibniz_on_d(d: &ProjectionSpec, t: &mut Tally) {
    let members = members_of_d(d);
    for a in &members {
        for b in &members {
            let out = d.leibniz_unchecked(a, b);
            t.check(out.holds, || {
                projection_witness(d)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("lhs", &out.lhs)
                    .endo("rhs", &out.rhs)
            });
        }
    }
}

fn maximality(d: &ProjectionSpec, t: &mut Tally) {
    let all = elements(d.simplex());
    for b in all.iter().filter(|b| !d.membership_unchecked(b).in_d()) {
        let broken = all.iter().any(|a| !d.leibniz_unchecked(a, b).holds);
        t.check(broken, || {
            projection_witness(d)
                .endo("beta", b)
                .note("no α breaks the Leibniz rule for this β outside D")
        });
    }
}

fn leibniz_inequality(d: &ProjectionSpec, t: &mut Tally) {
    let members = members_of_d(d);
    for a in &members {
        let pa = d.clamp_unchecked(a);
        for b in &members {
            let left = pa.then(b);
            let right = d.clamp_unchecked(&a.then(b));
            t.check(left.le_pointwise(&right), || {
                projection_witness(d)
                    .endo("alpha", a)
                    .endo("beta", b)
                    .endo("projected_alpha_beta", &left)
                    .endo("projected_product", &right)
            });
        }
    }
}

fn left_ideal(d: &ProjectionSpec, t: &mut Tally) {
    let members = members_of_d(d);
    for r in d.lower()..d.upper() {
        let sub = SimplexSpec::new(d.vertices().slice(r, d.upper()));
        for gamma in enumerate_simplex(&sub) {
            for delta in &members {
                let product = delta.then(&gamma);
                t.check(sub.contains(&product), || {
                    projection_witness(d)
                        .param("r", r as u128)
                        .endo("delta", delta)
                        .endo("gamma", &gamma)
                        .endo("product", &product)
                });
            }
        }
    }
}

pub(super) fn ideal_tally(
    sub: &SubsetSelector,
    members: &[Endo],
    hosts: &[Endo],
    side: IdealSide,
    cap: usize,
) -> Tally {
    let mut t = Tally::new(cap);
    let inside = |e: &Endo| sub.contains(e).unwrap_or(false);
    for i in members {
        for r in hosts {
            if matches!(side, IdealSide::Left | IdealSide::TwoSided) {
                let product = r.then(i);
                t.check(inside(&product), || {
                    Witness::new(i.n())
                        .endo("host", r)
                        .endo("member", i)
                        .endo("product", &product)
                        .note("host·member left the ideal")
                });
            }
            if matches!(side, IdealSide::Right | IdealSide::TwoSided) {
                let product = i.then(r);
                t.check(inside(&product), || {
                    Witness::new(i.n())
                        .endo("host", r)
                        .endo("member", i)
                        .endo("product", &product)
                        .note("member·host left the ideal")
                });
            }
        }
    }
    t
}

/// D of the projection onto `a_0 ..= a_upper`.
fn in_d_from_bottom(simplex: &SimplexSpec, upper: usize, a: &Endo) -> bool {
    let ceiling = simplex.vertices().vertex(upper);
    a.at(ceiling) <= ceiling
}

fn composition_bottom(simplex: &SimplexSpec, t: &mut Tally) {
    let k = simplex.k();
    let all = elements(simplex);
    for upper in 2..k {
        let outer = ProjectionSpec::new(simplex.clone(), 0, upper).expect("0 < m <= k-1");
        for upper1 in 1..upper {
            let inner = ProjectionSpec::new(outer.image_simplex(), 0, upper1).expect("m1 < m");
            let direct = ProjectionSpec::new(simplex.clone(), 0, upper1).expect("m1 < m");
            for a in all.iter().filter(|a| {
                in_d_from_bottom(simplex, upper, a) && in_d_from_bottom(simplex, upper1, a)
            }) {
                let two_step = project_then_project(&outer, &inner, a).expect("compatible specs");
                let one_step = direct.project(a).expect("in σ(A)");
                t.check(two_step == one_step, || {
                    Witness::in_simplex(simplex)
                        .param("m", upper as u128)
                        .param("m1", upper1 as u128)
                        .endo("alpha", a)
                        .endo("two_step", &two_step)
                        .endo("one_step", &one_step)
                });
            }
        }
    }
}

fn composition_top(simplex: &SimplexSpec, t: &mut Tally) {
    let k = simplex.k();
    let all = elements(simplex);
    for lower in 0..k - 1 {
        let outer = ProjectionSpec::new(simplex.clone(), lower, k - 1).expect("l < k-1");
        for lower1 in lower + 1..k - 1 {
            let inner = ProjectionSpec::new(outer.image_simplex(), lower1 - lower, k - 1 - lower)
                .expect("l1 < k-1");
            let direct = ProjectionSpec::new(simplex.clone(), lower1, k - 1).expect("l1 < k-1");
            for a in all.iter().filter(|a| {
                outer.membership_unchecked(a).in_d() && direct.membership_unchecked(a).in_d()
            }) {
                let two_step = project_then_project(&outer, &inner, a).expect("compatible specs");
                let one_step = direct.project(a).expect("in σ(A)");
                t.check(two_step == one_step, || {
                    Witness::in_simplex(simplex)
                        .param("l", lower as u128)
                        .param("l1", lower1 as u128)
                        .endo("alpha", a)
                        .endo("two_step", &two_step)
                        .endo("one_step", &one_step)
                });
            }
        }
    }
}

/// The `S` set of the projection onto `a_lower ..= a_{k-1}`, as a count.
fn top_s_count(simplex: &SimplexSpec, lower: usize) -> Result<u128> {
    let d = ProjectionSpec::new(simplex.clone(), lower, simplex.k() - 1)?;
    count(&SubsetSelector::S { projection: d }, u128::MAX)
}

fn top_projection(simplex: &SimplexSpec, lower: usize) -> ProjectionSpec {
    ProjectionSpec::new(simplex.clone(), lower, simplex.k() - 1).expect("l < k-1")
}

fn top_singleton(simplex: &SimplexSpec, t: &mut Tally) {
    let d = top_projection(simplex, simplex.k() - 2);
    let top = simplex.top();
    for a in enumerate_simplex(simplex) {
        let in_s = d.in_s_unchecked(&a);
        t.check(in_s == (a == top), || {
            let w = Witness::in_simplex(simplex).endo("alpha", &a);
            if in_s {
                w.note("in S with l = k-2 but not the top constant")
            } else {
                w.note("top constant missing from S")
            }
        });
    }
}

fn top_inclusion(simplex: &SimplexSpec, t: &mut Tally) {
    let k = simplex.k();
    let specs: Vec<ProjectionSpec> = (0..k - 1).map(|l| top_projection(simplex, l)).collect();
    for a in enumerate_simplex(simplex) {
        for lower in 1..k - 1 {
            for lower1 in lower + 1..k - 1 {
                let ok = !specs[lower1].in_s_unchecked(&a) || specs[lower].in_s_unchecked(&a);
                t.check(ok, || {
                    Witness::in_simplex(simplex)
                        .param("l", lower as u128)
                        .param("l1", lower1 as u128)
                        .endo("alpha", &a)
                        .note("in S_l1 but not in S_l")
                });
            }
        }
    }
}

fn top_disjoint(simplex: &SimplexSpec, t: &mut Tally) {
    let k = simplex.k();
    let specs: Vec<ProjectionSpec> = (0..k - 1).map(|l| top_projection(simplex, l)).collect();
    for a in enumerate_simplex(simplex) {
        for lower in 1..k - 1 {
            for lower1 in 1..k - 1 {
                let both = specs[lower1].in_s_unchecked(&a) && specs[lower].in_r_unchecked(&a);
                t.check(!both, || {
                    Witness::in_simplex(simplex)
                        .param("l", lower as u128)
                        .param("l1", lower1 as u128)
                        .endo("alpha", &a)
                        .note("in S_l1 and in R_l")
                });
            }
        }
    }
}

fn top_intersection(simplex: &SimplexSpec, t: &mut Tally) {
    let k = simplex.k();
    let specs: Vec<ProjectionSpec> = (1..k - 1).map(|l| top_projection(simplex, l)).collect();
    let top = simplex.top();
    for a in enumerate_simplex(simplex) {
        let in_all = specs.iter().all(|d| d.membership_unchecked(&a).in_d());
        let expected = a == top || in_dcap(simplex, &a);
        t.check(in_all == expected, || {
            let w = Witness::in_simplex(simplex).endo("alpha", &a);
            if in_all {
                w.note("in every D_l but neither the top constant nor in D")
            } else {
                w.note("in the right-hand side but missing from some D_l")
            }
        });
    }
}

fn corollary_n_closed(&n: &usize, t: &mut Tally) {
    let nilpotent = SubsetSelector::N { n };
    let members: Vec<Endo> = enumerate_subset(&nilpotent).expect("n >= 1").collect();
    let full = SimplexSpec::full(n).expect("n >= 1");
    for upper in 1..=n - 2 {
        let d = ProjectionSpec::new(full.clone(), 0, upper).expect("m <= n-2");
        for a in &members {
            let projected = d.project(a).expect("in the full simplex");
            t.check(nilpotent.contains(&projected).unwrap_or(false), || {
                Witness::new(n)
                    .param("m", upper as u128)
                    .endo("alpha", a)
                    .endo("projected", &projected)
            });
        }
    }
}

fn catalan_count(n: usize, over_nilpotent: bool, ceiling: u128, t: &mut Tally) {
    let (sel, expected) = if over_nilpotent {
        (SubsetSelector::On { n }, catalan(n as u64))
    } else {
        (SubsetSelector::N { n }, catalan(n as u64 - 1))
    };
    let found = count(&sel, ceiling).expect("checked against the ceiling");
    t.check(found == expected, || {
        Witness::new(n)
            .param("count", found)
            .param("expected", expected)
    });
}

fn nilpotent_powers(&n: &usize, t: &mut Tally) {
    let zero = Endo::constant(n, 0).expect("n >= 1");
    let nilpotent = SubsetSelector::N { n };
    for a in enumerate_simplex(&SimplexSpec::full(n).expect("n >= 1")) {
        let by_order = nilpotent.contains(&a).expect("in the full simplex");
        let mut power = a.clone();
        let mut reaches_zero = power == zero;
        for _ in 1..n {
            if reaches_zero {
                break;
            }
            power = power.then(&a);
            reaches_zero = power == zero;
        }
        t.check(by_order == reaches_zero, || {
            Witness::new(n)
                .endo("alpha", &a)
                .endo("power_n", &a.power(n))
        });
    }
}
