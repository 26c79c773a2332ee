use super::{ReductionArtifact, ReductionKind};
use crate::gf2::Gf2Vector;
use crate::instance::{EvenOddSetInstance, NearestCodeword};

/// Replaces every even set `S_e` by `S_e △ S_o`, where `S_o` is the first odd set.
/// Without odd sets the target has no sets at all (the empty solution is optimal).
pub fn evenodd_to_odd(e: &EvenOddSetInstance) -> ReductionArtifact<EvenOddSetInstance, EvenOddSetInstance> {
    let mut target = EvenOddSetInstance::new(e.universe());
    if let Some(anchor) = e.sets().iter().find(|s| s.odd) {
        for s in e.sets() {
            let elements = if s.odd {
                s.elements.clone()
            } else {
                symmetric_difference(&s.elements, &anchor.elements)
            };
            target.add_set(&elements, true).expect("elements stay in range");
        }
    }
    ReductionArtifact::new(
        target,
        ReductionKind::CostPreserving,
        "even/odd set to odd set by symmetric difference with the first odd set",
        |t: &Vec<usize>| t.clone(),
    )
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Nearest Codeword to Odd Set through the orthogonal complement: a set per row
/// of `A⊥`, with parity given by `A⊥·b`. A chosen element set is the error
/// pattern `z′`, and `x` solves `A·x = b ⊕ z′`.
pub fn nc_to_oddset(nc: &NearestCodeword) -> ReductionArtifact<NearestCodeword, EvenOddSetInstance> {
    let perp = nc.a.orthogonal_complement();
    let parity = perp.mul_vec(&nc.b);
    let mut evenodd = EvenOddSetInstance::new(nc.rows());
    for (i, row) in perp.rows().iter().enumerate() {
        evenodd.add_set(&row.support(), parity.get(i)).expect("row supports lie in the universe");
    }
    let a = nc.a.clone();
    let b = nc.b.clone();
    let first = ReductionArtifact::new(
        evenodd,
        ReductionKind::CostPreserving,
        "nearest codeword to even/odd set via the orthogonal complement",
        move |t: &Vec<usize>| {
            let mut z = Gf2Vector::zeros(b.len());
            for &i in t {
                z.set(i, true);
            }
            a.solve(&b.xor(&z)).expect("a feasible parity solution is a syndrome-consistent error")
        },
    );
    first.then(evenodd_to_odd)
}

/// Instance squaring: with `n` elements and `m` sets, adds `n²` copies `x_h^i`,
/// a fresh element `e`, the sets `{e, x_i} ∪ {x_h^i : h ∈ S_j}` for every `i, j`,
/// and `{e}`. Target optimum is `1 + k + k²` for source optimum `k`; the pull-back
/// keeps the original elements.
///
/// Element layout: originals `0..n`, then `x_h^i` at `n + i·n + h`, then `e` last.
pub fn oddset_self_improve(e: &EvenOddSetInstance) -> ReductionArtifact<EvenOddSetInstance, EvenOddSetInstance> {
    let n = e.universe();
    let fresh = n + n * n;
    let mut target = EvenOddSetInstance::new(fresh + 1);
    for s in e.sets() {
        target.add_set(&s.elements, s.odd).expect("original sets stay in range");
    }
    for i in 0..n {
        for s in e.sets() {
            let mut elements = vec![fresh, i];
            elements.extend(s.elements.iter().map(|&h| n + i * n + h));
            target.add_set(&elements, s.odd).expect("copies stay in range");
        }
    }
    target.add_set(&[fresh], true).expect("fresh element is in range");
    ReductionArtifact::new(
        target,
        ReductionKind::Squaring,
        "odd set self-improvement by instance squaring",
        move |t: &Vec<usize>| t.iter().copied().filter(|&x| x < n).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Matrix;
    use crate::reduce::Problem;

    #[test]
    fn symmetric_difference_rule() {
        let mut e = EvenOddSetInstance::new(4);
        e.add_set(&[1, 2], true).unwrap();
        e.add_set(&[2, 3], false).unwrap();
        let art = evenodd_to_odd(&e);
        let sets: Vec<Vec<usize>> = art.target.sets().iter().map(|s| s.elements.clone()).collect();
        assert_eq!(sets, vec![vec![1, 2], vec![1, 3]]);
        assert!(art.target.is_all_odd());
    }

    #[test]
    fn all_even_gives_empty_target() {
        let mut e = EvenOddSetInstance::new(3);
        e.add_set(&[0, 1], false).unwrap();
        let art = evenodd_to_odd(&e);
        assert_eq!(art.target.num_sets(), 0);
        assert_eq!(art.target.optimum().unwrap().unwrap().1, 0);
    }

    #[test]
    fn two_by_one_codeword() {
        let nc = NearestCodeword::new(
            Gf2Matrix::from_bit_strings(&["1", "1"]).unwrap(),
            Gf2Vector::from_bit_string("10").unwrap(),
        )
        .unwrap();
        let art = nc_to_oddset(&nc);
        assert_eq!(art.target.num_sets(), 1);
        assert_eq!(art.target.sets()[0].elements, vec![0, 1]);
        let (t, k) = art.target.optimum().unwrap().unwrap();
        assert_eq!(k, 1);
        assert_eq!(nc.distance(&art.pull_back(&t)), 1);
    }

    #[test]
    fn squaring_single_unit() {
        let e = EvenOddSetInstance::odd_sets(1, &[vec![0]]).unwrap();
        let art = oddset_self_improve(&e);
        assert_eq!(art.target.universe(), 3);
        let sets: Vec<Vec<usize>> = art.target.sets().iter().map(|s| s.elements.clone()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 1, 2], vec![2]]);
        let (t, k) = art.target.optimum().unwrap().unwrap();
        assert_eq!(k, 3);
        assert_eq!(art.pull_back(&t), vec![0]);

        let empty = oddset_self_improve(&EvenOddSetInstance::new(0));
        assert_eq!(empty.target.optimum().unwrap().unwrap().1, 1);
    }
}
