//! Exhaustive bottleneck matcher for small diagrams.
//!
//! Enumerates every bijection (with diagonal assignments) outright, so it is
//! only usable for a handful of points per side, but there is no matching
//! cleverness to distrust.

use cliph_core::persistence::{DiagramPoint, PersistenceDiagram};
use cliph_core::ratio::{rat, Rational};

/// Bottleneck distance by brute force; `None` is the infinite distance.
/// Intended for diagrams with at most ~6 finite points per side.
pub fn exhaustive_bottleneck(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Option<Rational> {
    let ess1: Vec<&DiagramPoint> = d1.points.iter().filter(|p| p.is_essential()).collect();
    let ess2: Vec<&DiagramPoint> = d2.points.iter().filter(|p| p.is_essential()).collect();
    if ess1.len() != ess2.len() {
        return None;
    }
    let fin1: Vec<&DiagramPoint> = d1.points.iter().filter(|p| !p.is_essential()).collect();
    let fin2: Vec<&DiagramPoint> = d2.points.iter().filter(|p| !p.is_essential()).collect();

    let ess_cost = best_essential_assignment(&ess1, &ess2);
    let fin_cost = best_finite_assignment(&fin1, &fin2);
    Some(ess_cost.max(fin_cost))
}

fn abs(r: Rational) -> Rational {
    if r < rat(0, 1) {
        -r
    } else {
        r
    }
}

/// Min over all bijections of the max birth difference.
fn best_essential_assignment(xs: &[&DiagramPoint], ys: &[&DiagramPoint]) -> Rational {
    fn rec(
        i: usize,
        xs: &[&DiagramPoint],
        ys: &[&DiagramPoint],
        used: &mut [bool],
        current: Rational,
        best: &mut Option<Rational>,
    ) {
        if i == xs.len() {
            *best = Some(best.map_or(current, |b: Rational| b.min(current)));
            return;
        }
        for j in 0..ys.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            let cost = abs(xs[i].birth - ys[j].birth);
            rec(i + 1, xs, ys, used, current.max(cost), best);
            used[j] = false;
        }
    }

    if xs.is_empty() {
        return rat(0, 1);
    }
    let mut best = None;
    let mut used = vec![false; ys.len()];
    rec(0, xs, ys, &mut used, rat(0, 1), &mut best);
    best.expect("equal-size sides always admit a bijection")
}

/// Min over all partial matchings (unmatched points pay their diagonal
/// projection) of the max assignment cost.
fn best_finite_assignment(xs: &[&DiagramPoint], ys: &[&DiagramPoint]) -> Rational {
    fn diagonal(p: &DiagramPoint) -> Rational {
        abs(p.birth - p.death.expect("finite point")) / rat(2, 1)
    }

    fn linf(a: &DiagramPoint, b: &DiagramPoint) -> Rational {
        abs(a.birth - b.birth).max(abs(a.death.unwrap() - b.death.unwrap()))
    }

    fn rec(
        i: usize,
        xs: &[&DiagramPoint],
        ys: &[&DiagramPoint],
        used: &mut [bool],
        current: Rational,
        best: &mut Option<Rational>,
    ) {
        if let Some(b) = best {
            if current >= *b {
                return;
            }
        }
        if i == xs.len() {
            let mut total = current;
            for (j, y) in ys.iter().enumerate() {
                if !used[j] {
                    total = total.max(diagonal(y));
                }
            }
            if best.is_none_or(|b| total < b) {
                *best = Some(total);
            }
            return;
        }
        for j in 0..ys.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            rec(i + 1, xs, ys, used, current.max(linf(xs[i], ys[j])), best);
            used[j] = false;
        }
        rec(i + 1, xs, ys, used, current.max(diagonal(xs[i])), best);
    }

    let mut best = None;
    let mut used = vec![false; ys.len()];
    rec(0, xs, ys, &mut used, rat(0, 1), &mut best);
    best.expect("diagonal-only assignment always exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use cliph_core::complex::FiltrationKind;

    fn diagram(points: Vec<(Rational, Option<Rational>)>) -> PersistenceDiagram {
        PersistenceDiagram {
            dimension: 0,
            kind: FiltrationKind::Cliqueness,
            points: points
                .into_iter()
                .map(|(birth, death)| DiagramPoint { birth, death })
                .collect(),
        }
    }

    #[test]
    fn identity_is_zero() {
        let d = diagram(vec![(rat(1, 1), Some(rat(1, 5))), (rat(1, 1), None)]);
        assert_eq!(exhaustive_bottleneck(&d, &d), Some(rat(0, 1)));
    }

    #[test]
    fn single_point_to_diagonal() {
        let a = diagram(vec![(rat(1, 1), Some(rat(0, 1)))]);
        let b = diagram(Vec::new());
        assert_eq!(exhaustive_bottleneck(&a, &b), Some(rat(1, 2)));
    }

    #[test]
    fn essential_mismatch_is_infinite() {
        let a = diagram(vec![(rat(1, 1), None)]);
        let b = diagram(Vec::new());
        assert_eq!(exhaustive_bottleneck(&a, &b), None);
    }

    #[test]
    fn direct_match_beats_projection() {
        let a = diagram(vec![(rat(1, 1), Some(rat(1, 5)))]);
        let b = diagram(vec![(rat(1, 1), Some(rat(0, 1)))]);
        assert_eq!(exhaustive_bottleneck(&a, &b), Some(rat(1, 5)));
    }
}
