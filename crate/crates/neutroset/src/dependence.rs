use crate::error::{Error, Result};
use crate::rat::{format_rational, int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelPair {
    TI,
    IF,
    FT,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DependenceSpec {
    pub pairwise: Vec<(ChannelPair, Rat)>,
    pub global: Option<Rat>,
    /// Sizes of fully-dependent subcomponent groups (refined bound).
    pub groups: Vec<u32>,
}

fn check_degree(d: &Rat) -> Result<()> {
    if d < &int(0) || d > &int(1) {
        return Err(Error::BadDegree(format_rational(d)));
    }
    Ok(())
}

/// x + y <= 2 - d for a pair with dependence degree d.
pub fn pair_sum_bound(d: &Rat) -> Result<Rat> {
    check_degree(d)?;
    Ok(int(2) - d)
}

/// t + i + f <= 3 - 2d under one global degree.
pub fn triple_sum_bound_global(d: &Rat) -> Result<Rat> {
    check_degree(d)?;
    Ok(int(3) - int(2) * d)
}

/// t + i + f <= 3 - min of the three pairwise degrees (a loose closed form;
/// `max_component_sum` computes the exact optimum).
pub fn triple_sum_bound_pairwise(d_ti: &Rat, d_if: &Rat, d_ft: &Rat) -> Result<Rat> {
    for d in [d_ti, d_if, d_ft] {
        check_degree(d)?;
    }
    let min = d_ti.min(d_if).min(d_ft);
    Ok(int(3) - min)
}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    let [a, b, c] = &m[0];
    let [d, e, f] = &m[1];
    let [g, h, i] = &m[2];
    a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
}

/// Exact max of t + i + f over [0,1]^3 subject to x + y <= 2 - d for each
/// constrained pair, by vertex enumeration of the feasible polytope.
pub fn max_component_sum(pairs: &[(ChannelPair, Rat)]) -> Result<Rat> {
    for (_, d) in pairs {
        check_degree(d)?;
    }
    // Constraints as (coef_t, coef_i, coef_f, rhs) meaning dot <= rhs.
    let mut cons: Vec<([Rat; 3], Rat)> = Vec::new();
    for axis in 0..3 {
        let mut up = [int(0), int(0), int(0)];
        up[axis] = int(1);
        cons.push((up.clone(), int(1)));
        let mut down = [int(0), int(0), int(0)];
        down[axis] = int(-1);
        cons.push((down, int(0)));
    }
    for (pair, d) in pairs {
        let mut row = [int(0), int(0), int(0)];
        let (a, b) = match pair {
            ChannelPair::TI => (0, 1),
            ChannelPair::IF => (1, 2),
            ChannelPair::FT => (2, 0),
        };
        row[a] = int(1);
        row[b] = int(1);
        cons.push((row, int(2) - d));
    }

    let mut best: Option<Rat> = None;
    let n = cons.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let m = [
                    cons[i].0.clone(),
                    cons[j].0.clone(),
                    cons[k].0.clone(),
                ];
                let d = det3(&m);
                if d == int(0) {
                    continue;
                }
                // Cramer's rule.
                let rhs = [cons[i].1.clone(), cons[j].1.clone(), cons[k].1.clone()];
                let mut point = [int(0), int(0), int(0)];
                for col in 0..3 {
                    let mut mc = m.clone();
                    for row in 0..3 {
                        mc[row][col] = rhs[row].clone();
                    }
                    point[col] = det3(&mc) / &d;
                }
                let feasible = cons.iter().all(|(row, b)| {
                    let dot: Rat = row
                        .iter()
                        .zip(point.iter())
                        .map(|(c, x)| c * x)
                        .sum();
                    &dot <= b
                });
                if feasible {
                    let sum: Rat = point.iter().cloned().sum();
                    best = Some(match best {
                        Some(prev) => prev.max(sum),
                        None => sum,
                    });
                }
            }
        }
    }
    best.ok_or_else(|| Error::Invalid("infeasible constraint set".into()))
}

/// Refined upper bound on the sum of n subcomponents: each fully-dependent
/// group of size m contributes 1 instead of m, each degree-d pair contributes
/// 2 - d instead of 2, independents contribute 1 each.
pub fn refined_sum_bound(n: u32, groups: &[u32], pair_degrees: &[Rat]) -> Result<Rat> {
    for d in pair_degrees {
        check_degree(d)?;
    }
    if groups.iter().any(|&m| m < 1) {
        return Err(Error::GroupOverflow("group of size 0".into()));
    }
    let covered: u32 = groups.iter().sum::<u32>() + 2 * pair_degrees.len() as u32;
    if covered > n {
        return Err(Error::GroupOverflow(format!(
            "{covered} covered subcomponents > n = {n}"
        )));
    }
    let mut bound = int(n as i64);
    for &m in groups {
        bound -= int(m as i64 - 1);
    }
    for d in pair_degrees {
        bound -= d;
    }
    Ok(bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBounds {
    pub t: (Rat, Rat),
    pub i: (Rat, Rat),
    pub f: (Rat, Rat),
}

impl ComponentBounds {
    pub fn new(t: (Rat, Rat), i: (Rat, Rat), f: (Rat, Rat)) -> Result<ComponentBounds> {
        for (lo, hi) in [&t, &i, &f] {
            if lo > hi {
                return Err(Error::BadBounds(format!(
                    "{} > {}",
                    format_rational(lo),
                    format_rational(hi)
                )));
            }
        }
        Ok(ComponentBounds { t, i, f })
    }
}

/// Range of t + i + f under one global degree: affine interpolation from the
/// independent sum (d = 0) down to the single-source extreme (d = 1).
pub fn off_sum_range_global(b: &ComponentBounds, d: &Rat) -> Result<(Rat, Rat)> {
    check_degree(d)?;
    let lows = [&b.t.0, &b.i.0, &b.f.0];
    let highs = [&b.t.1, &b.i.1, &b.f.1];
    let sum_lo: Rat = lows.iter().copied().cloned().sum();
    let sum_hi: Rat = highs.iter().copied().cloned().sum();
    let min_lo = lows.iter().copied().min().unwrap().clone();
    let max_hi = highs.iter().copied().max().unwrap().clone();
    let lo = &sum_lo - (&sum_lo - min_lo) * d;
    let hi = &sum_hi - (&sum_hi - max_hi) * d;
    Ok((lo, hi))
}

/// Two-channel analogue of `off_sum_range_global`.
pub fn off_pair_range(
    x_lo: &Rat,
    x_hi: &Rat,
    y_lo: &Rat,
    y_hi: &Rat,
    d: &Rat,
) -> Result<(Rat, Rat)> {
    check_degree(d)?;
    if x_lo > x_hi || y_lo > y_hi {
        return Err(Error::BadBounds(format!(
            "[{}, {}] / [{}, {}]",
            format_rational(x_lo),
            format_rational(x_hi),
            format_rational(y_lo),
            format_rational(y_hi)
        )));
    }
    let sum_lo = x_lo + y_lo;
    let sum_hi = x_hi + y_hi;
    let min_lo = x_lo.min(y_lo).clone();
    let max_hi = x_hi.max(y_hi).clone();
    let lo = &sum_lo - (&sum_lo - min_lo) * d;
    let hi = &sum_hi - (&sum_hi - max_hi) * d;
    Ok((lo, hi))
}

/// Fully-dependent pair bound min{x_lo, y_lo} .. max{x_hi, y_hi}; with a third
/// independent channel its bounds add on.
pub fn dependent_pair_off_bound(
    x_lo: &Rat,
    x_hi: &Rat,
    y_lo: &Rat,
    y_hi: &Rat,
    third: Option<(&Rat, &Rat)>,
) -> Result<(Rat, Rat)> {
    if x_lo > x_hi || y_lo > y_hi {
        return Err(Error::BadBounds(format!(
            "[{}, {}] / [{}, {}]",
            format_rational(x_lo),
            format_rational(x_hi),
            format_rational(y_lo),
            format_rational(y_hi)
        )));
    }
    let mut lo = x_lo.min(y_lo).clone();
    let mut hi = x_hi.max(y_hi).clone();
    if let Some((t_lo, t_hi)) = third {
        if t_lo > t_hi {
            return Err(Error::BadBounds(format!(
                "[{}, {}]",
                format_rational(t_lo),
                format_rational(t_hi)
            )));
        }
        lo += t_lo;
        hi += t_hi;
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, parse_rational};

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    #[test]
    fn pair_bound() {
        assert_eq!(pair_sum_bound(&r("0.75")).unwrap(), r("1.25"));
        assert_eq!(pair_sum_bound(&int(0)).unwrap(), int(2));
        assert_eq!(pair_sum_bound(&int(1)).unwrap(), int(1));
        assert!(pair_sum_bound(&r("1.5")).is_err());
    }

    #[test]
    fn triple_bounds() {
        assert_eq!(triple_sum_bound_global(&int(1)).unwrap(), int(1));
        assert_eq!(triple_sum_bound_global(&int(0)).unwrap(), int(3));
        assert_eq!(triple_sum_bound_global(&r("0.5")).unwrap(), int(2));
        assert_eq!(
            triple_sum_bound_pairwise(&int(0), &int(0), &int(0)).unwrap(),
            int(3)
        );
        assert_eq!(
            triple_sum_bound_pairwise(&int(1), &int(1), &int(1)).unwrap(),
            int(2)
        );
        assert_eq!(
            triple_sum_bound_pairwise(&r("0.3"), &r("0.6"), &int(0)).unwrap(),
            int(3)
        );
    }

    #[test]
    fn exact_optimum() {
        assert_eq!(
            max_component_sum(&[(ChannelPair::FT, r("0.3")), (ChannelPair::IF, r("0.6"))])
                .unwrap(),
            r("2.4")
        );
        assert_eq!(
            max_component_sum(&[(ChannelPair::TI, int(1)), (ChannelPair::IF, int(0))]).unwrap(),
            int(2)
        );
        assert_eq!(max_component_sum(&[]).unwrap(), int(3));
    }

    #[test]
    fn pair_bound_agrees_with_vertex_enumeration() {
        // Single constrained pair with the third channel saturated at 1:
        // optimum = (2 - d) + 1.
        for d in ["0", "0.25", "0.75", "1"] {
            let d = r(d);
            let got = max_component_sum(&[(ChannelPair::TI, d.clone())]).unwrap();
            assert_eq!(got, pair_sum_bound(&d).unwrap() + int(1));
        }
    }

    #[test]
    fn refined_bounds() {
        assert_eq!(refined_sum_bound(6, &[3], &[]).unwrap(), int(4));
        assert_eq!(refined_sum_bound(6, &[], &[r("0.2")]).unwrap(), r("5.8"));
        assert_eq!(refined_sum_bound(6, &[], &[]).unwrap(), int(6));
        assert!(refined_sum_bound(3, &[3], &[r("0.2")]).is_err());
    }

    #[test]
    fn global_off_range() {
        let b = ComponentBounds::new(
            (r("-1.2"), r("1.2")),
            (r("-1.2"), r("1.2")),
            (r("-1.2"), r("1.2")),
        )
        .unwrap();
        assert_eq!(
            off_sum_range_global(&b, &int(0)).unwrap(),
            (r("-3.6"), r("3.6"))
        );
        assert_eq!(
            off_sum_range_global(&b, &int(1)).unwrap(),
            (r("-1.2"), r("1.2"))
        );
        assert_eq!(
            off_sum_range_global(&b, &r("0.5")).unwrap(),
            (r("-2.4"), r("2.4"))
        );
    }

    #[test]
    fn distinct_bounds_interpolate() {
        let b = ComponentBounds::new(
            (r("-2.25"), r("1.5")),
            (int(0), int(2)),
            (int(0), r("1.75")),
        )
        .unwrap();
        let (lo0, hi0) = off_sum_range_global(&b, &int(0)).unwrap();
        assert_eq!((lo0, hi0), (r("-2.25"), r("5.25")));
        let (lo1, hi1) = off_sum_range_global(&b, &int(1)).unwrap();
        assert_eq!((lo1, hi1), (r("-2.25"), int(2)));
        let (lo_h, hi_h) = off_sum_range_global(&b, &frac(1, 2)).unwrap();
        assert_eq!(lo_h, r("-2.25"));
        assert_eq!(hi_h, r("3.625"));
    }

    #[test]
    fn pair_off_range() {
        assert_eq!(
            off_pair_range(&r("-1"), &int(1), &int(0), &int(2), &int(0)).unwrap(),
            (r("-1"), int(3))
        );
        assert_eq!(
            off_pair_range(&r("-1"), &int(1), &int(0), &int(2), &int(1)).unwrap(),
            (r("-1"), int(2))
        );
        let fully = dependent_pair_off_bound(&r("-1"), &int(1), &int(0), &int(2), None).unwrap();
        assert_eq!(
            off_pair_range(&r("-1"), &int(1), &int(0), &int(2), &int(1)).unwrap(),
            fully
        );
    }

    #[test]
    fn dependent_pair_with_third() {
        assert_eq!(
            dependent_pair_off_bound(
                &int(0),
                &int(1),
                &r("-0.5"),
                &r("0.5"),
                Some((&r("0.1"), &r("0.9")))
            )
            .unwrap(),
            (r("-0.4"), r("1.9"))
        );
    }

    #[test]
    fn monotone_in_degree() {
        let b = ComponentBounds::new(
            (r("-1.4"), r("1.25")),
            (int(0), r("0.3")),
            (int(0), r("0.4")),
        )
        .unwrap();
        let mut prev: Option<(Rat, Rat)> = None;
        for k in 0..=10 {
            let d = frac(k, 10);
            let (lo, hi) = off_sum_range_global(&b, &d).unwrap();
            if let Some((plo, phi)) = prev {
                assert!(lo >= plo, "lo must not decrease with d");
                assert!(hi <= phi, "hi must not increase with d");
            }
            prev = Some((lo, hi));
        }
    }
}
