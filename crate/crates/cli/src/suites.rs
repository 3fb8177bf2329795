//! Case lists for the `verify` subcommand.
//!
//! Every case is built, with its id and its sampled inputs, before anything
//! runs, so the report order does not depend on scheduling.

use binomconv::configuration::{enumerate_ordered, enumerate_tower_free};
use binomconv::exactnum::{four_pow, int, ratio, Polynomial, Rational};
use binomconv::identities::{
    closed_form, convolution_sum, delta_formula_check, inclusion_exclusion_set_form,
    inclusion_exclusion_sum, opposite_offsets_check, odd_t_forms, recurrence_check, shift_invariance_poly,
    ConvolutionSpec,
};
use binomconv::sampling::RationalSampler;
use binomconv::series::{
    base_series, series_pow, telescoped_sum_check, wz_certificate_check, BaseSeries, Family,
    GeneratingFunctions, TruncatedSeries,
};
use binomconv::sweep::bijection_sweep;
use binomconv::Execution;

use crate::report::Case;

/// Largest `n` accepted by the exhaustive bijection suite.
pub const BIJECTION_N_LIMIT: usize = 10;

type Job<'a> = Box<dyn FnOnce() -> Vec<Case> + Send + 'a>;

#[derive(Debug, Clone)]
pub struct Bounds {
    pub n_max: usize,
    pub t_max: usize,
    pub order: usize,
    pub seed: u64,
}

pub fn run(jobs: Vec<Job<'_>>, exec: Execution) -> Vec<Case> {
    exec.map(jobs, |job| job()).into_iter().flatten().collect()
}

fn one<'a>(f: impl FnOnce() -> Case + Send + 'a) -> Job<'a> {
    Box::new(move || vec![f()])
}

fn conv(n: usize, offsets: Vec<Rational>) -> Rational {
    convolution_sum(&ConvolutionSpec::new(n, offsets).expect("non-empty offsets"))
}

fn list(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn bijection(b: &Bounds, exec: Execution) -> Vec<Job<'static>> {
    (0..=b.n_max)
        .map(|n| -> Job<'static> {
            Box::new(move || {
                let s = bijection_sweep(n, exec);
                let id = |what: &str| format!("bijection/n={n}/{what}");
                let input = [("n", n.to_string())];
                let zero = |what: &str, count: usize| {
                    Case::compare(id(what), &input, "0".into(), count.to_string())
                };
                vec![
                    Case::compare(
                        id("domain"),
                        &input,
                        four_pow(n as u32).to_string(),
                        s.ordered.to_string(),
                    ),
                    Case::compare(
                        id("image"),
                        &input,
                        s.tower_free.to_string(),
                        s.image_size.to_string(),
                    ),
                    zero("codomain-failures", s.codomain_failures),
                    zero("left-inverse-failures", s.left_inverse_failures),
                    zero("right-inverse-failures", s.right_inverse_failures),
                    zero("descent-failures", s.descent_law_failures),
                    zero("fixed-point-failures", s.fixed_point_failures),
                    zero("section-anchor-failures", s.anchor_failures),
                ]
            })
        })
        .collect()
}

pub fn identities(b: &Bounds) -> Vec<Job<'static>> {
    let mut jobs: Vec<Job<'static>> = Vec::new();
    let n_max = b.n_max;

    for n in 0..=n_max {
        jobs.push(one(move || {
            let actual = conv(n, vec![int(0), int(0)]);
            Case::compare(
                format!("main/n={n}"),
                &[("n", n.to_string())],
                four_pow(n as u32).to_string(),
                actual.to_string(),
            )
        }));
    }
    for n in 0..=n_max.min(8) {
        jobs.push(one(move || {
            let want = four_pow(n as u32);
            let ordered = enumerate_ordered(n).count();
            let tower_free = enumerate_tower_free(n).count();
            Case::compare(
                format!("counts/n={n}"),
                &[("n", n.to_string())],
                format!("ordered={want} tower_free={want}"),
                format!("ordered={ordered} tower_free={tower_free}"),
            )
        }));
    }
    for t in 1..=b.t_max {
        for n in 0..=n_max {
            jobs.push(one(move || {
                let actual = convolution_sum(&ConvolutionSpec::central(t, n).expect("t ≥ 1"));
                Case::compare(
                    format!("central/t={t}/n={n}"),
                    &[("t", t.to_string()), ("n", n.to_string())],
                    closed_form(n, &int(t as i64)).to_string(),
                    actual.to_string(),
                )
            }));
        }
    }
    for n in 0..=n_max.min(12) {
        for l in 0..=6 {
            jobs.push(one(move || {
                Case::holds(
                    format!("odd-t/n={n}/L={l}"),
                    &[("n", n.to_string()), ("L", l.to_string())],
                    odd_t_forms(n, l),
                )
            }));
        }
    }
    for t in 1..=b.t_max.min(6) {
        for n in 0..=n_max.min(16) {
            jobs.push(one(move || {
                Case::holds(
                    format!("recurrence/t={t}/n={n}"),
                    &[("t", t.to_string()), ("n", n.to_string())],
                    recurrence_check(t, n),
                )
            }));
        }
    }

    let mut sampler = RationalSampler::new(b.seed);
    let random_l: Vec<Rational> = (0..20).map(|_| sampler.rational()).collect();
    for n in 0..=n_max.min(16) {
        let integers = (2 * n as i64 + 1..=2 * n as i64 + 3).map(int);
        for (k, l) in integers.chain(random_l.iter().cloned()).enumerate() {
            jobs.push(one(move || {
                let inputs = [("n", n.to_string()), ("L", l.to_string())];
                Case::holds(
                    format!("opposite-offsets/n={n}/{k}"),
                    &inputs,
                    opposite_offsets_check(n, &l),
                )
            }));
        }
    }
    for k in 0..100 {
        let t = sampler.index(1..=b.t_max.clamp(1, 5));
        let offsets = sampler.zero_sum_offsets(t);
        for n in 0..=n_max.min(12) {
            let offsets = offsets.clone();
            jobs.push(one(move || {
                let inputs = [("n", n.to_string()), ("offsets", list(&offsets))];
                let actual = conv(n, offsets.clone());
                Case::compare(
                    format!("zero-sum/{k}/n={n}"),
                    &inputs,
                    closed_form(n, &int(t as i64)).to_string(),
                    actual.to_string(),
                )
            }));
        }
    }
    for big_l in 0..=30usize {
        jobs.push(one(move || {
            let bad: Vec<usize> = (0..=big_l)
                .filter(|&p| {
                    inclusion_exclusion_sum(&int(big_l as i64), p) != int(1)
                        || inclusion_exclusion_set_form(big_l, p) != Ok(int(1))
                })
                .collect();
            Case::compare(
                format!("inclusion-exclusion/L={big_l}"),
                &[("L", big_l.to_string())],
                "[]".into(),
                format!("{bad:?}"),
            )
        }));
    }
    for p in 0..=12 {
        jobs.push(one(move || {
            let actual = inclusion_exclusion_sum(&Polynomial::ell(), p);
            Case::compare(
                format!("inclusion-exclusion/symbolic/p={p}"),
                &[("p", p.to_string())],
                "1".into(),
                actual.to_string(),
            )
        }));
    }

    let shifts = [int(0), int(1), int(-1), ratio(3, 2), ratio(-5, 2)];
    for a in &shifts {
        for n in 0..=n_max.min(8) {
            let a = a.clone();
            jobs.push(one(move || {
                let expected = conv(n, vec![a.clone(), int(0)]);
                let actual = shift_invariance_poly(n, &a);
                Case::compare(
                    format!("shift-invariance/a={a}/n={n}"),
                    &[("a", a.to_string()), ("n", n.to_string())],
                    expected.to_string(),
                    actual.to_string(),
                )
            }));
        }
        for n in 1..=n_max.min(6) {
            for i in 0..n {
                for m in 1..=n - i {
                    let a = a.clone();
                    jobs.push(one(move || {
                        let inputs = [
                            ("a", a.to_string()),
                            ("n", n.to_string()),
                            ("i", i.to_string()),
                            ("m", m.to_string()),
                        ];
                        let ok = delta_formula_check(n, &a, i, m) == Ok(true);
                        Case::holds(format!("difference/a={a}/n={n}/i={i}/m={m}"), &inputs, ok)
                    }));
                }
            }
        }
    }
    jobs
}

pub fn series(b: &Bounds) -> Vec<Job<'static>> {
    let order = b.order;
    let gf = std::sync::Arc::new(GeneratingFunctions::new(order));
    let mut jobs: Vec<Job<'static>> = Vec::new();
    let at = |extra: &[(&'static str, String)]| {
        let mut v = vec![("order", order.to_string())];
        v.extend_from_slice(extra);
        v
    };

    {
        let gf = gf.clone();
        let inputs = at(&[]);
        jobs.push(one(move || {
            let direct = base_series(&BaseSeries::BinomialPower(ratio(-1, 2)), order);
            Case::holds("route/g".into(), &inputs, *gf.g() == direct)
        }));
    }
    for t in [int(-3), int(-1), int(1), int(2), int(3), ratio(7, 2)] {
        let gf = gf.clone();
        let inputs = at(&[("t", t.to_string())]);
        jobs.push(one(move || {
            let via_pow = series_pow(gf.g(), &t).ok();
            let direct = base_series(&BaseSeries::BinomialPower(-&t / int(2)), order);
            Case::holds(
                format!("route/g^{t}"),
                &inputs,
                via_pow.as_ref() == Some(&direct),
            )
        }));
    }
    {
        let gf = gf.clone();
        let inputs = at(&[]);
        jobs.push(one(move || {
            let root = base_series(&BaseSeries::BinomialPower(ratio(1, 2)), order);
            let lhs = gf.catalan() * &(&TruncatedSeries::one(order) + &root);
            Case::holds(
                "route/catalan".into(),
                &inputs,
                lhs == TruncatedSeries::constant(int(2), order),
            )
        }));
    }

    let params = [
        int(-3),
        int(-1),
        ratio(-1, 2),
        ratio(1, 2),
        int(1),
        int(2),
        int(3),
        ratio(7, 2),
    ];
    let families = [
        (Family::GPower, "g^t"),
        (Family::GTimesCatalanPower, "g*C^l"),
        (Family::CatalanPower, "C^l"),
    ];
    let mut coefficient_cases: Vec<(Family, &str, Rational)> = families
        .iter()
        .flat_map(|&(f, name)| params.iter().map(move |p| (f, name, p.clone())))
        .collect();
    coefficient_cases.push((Family::CatalanPower, "C^l", int(-2)));
    for (family, name, p) in coefficient_cases {
        let gf = gf.clone();
        let inputs = at(&[("family", name.to_string()), ("param", p.to_string())]);
        jobs.push(one(move || {
            Case::holds(
                format!("coefficients/{name}/{p}"),
                &inputs,
                gf.coefficient_identity(family, &p),
            )
        }));
    }
    let n_top = 5.min(order.saturating_sub(8));
    for &(family, name) in &families {
        for p in &params {
            for n in 1..=n_top {
                let gf = gf.clone();
                let p = p.clone();
                let inputs = at(&[
                    ("family", name.to_string()),
                    ("param", p.to_string()),
                    ("n", n.to_string()),
                ]);
                jobs.push(one(move || {
                    let actual = match gf.derivative_identity(family, &p, n) {
                        Ok(ok) => ok.to_string(),
                        Err(e) => e.to_string(),
                    };
                    Case::compare(
                        format!("derivative/{name}/{p}/n={n}"),
                        &inputs,
                        "true".into(),
                        actual,
                    )
                }));
            }
        }
    }
    if order >= 2 {
        let gf2 = gf.clone();
        let inputs = at(&[]);
        jobs.push(one(move || {
            let g = gf2.g();
            let rhs = (&(g * g) * g).scale(&int(2)).truncate(order - 1);
            Case::holds("ode/g".into(), &inputs, g.derivative().ok() == Some(rhs))
        }));
        let inputs = at(&[]);
        jobs.push(one(move || {
            let (g, c) = (gf.g(), gf.catalan());
            let rhs = (g * &(c * c)).truncate(order - 1);
            Case::holds(
                "ode/catalan".into(),
                &inputs,
                c.derivative().ok() == Some(rhs),
            )
        }));
    }

    for n in 0..=b.n_max {
        for i in 0..=n as i64 + 1 {
            jobs.push(one(move || {
                let ok = wz_certificate_check(n, i) == Ok(true);
                Case::holds(
                    format!("certificate/n={n}/i={i}"),
                    &[("n", n.to_string()), ("i", i.to_string())],
                    ok,
                )
            }));
        }
        jobs.push(one(move || {
            Case::holds(
                format!("telescoped-sum/n={n}"),
                &[("n", n.to_string())],
                telescoped_sum_check(n),
            )
        }));
    }
    jobs
}
