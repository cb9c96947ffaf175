use super::{Arc, Digraph};

/// Isomorphism-invariant key: the lexicographically smallest sorted arc list
/// over all relabellings consistent with the refined degree colouring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    arcs: Vec<Arc>,
}

impl CanonicalForm {
    /// The canonical relabelling as a digraph.
    pub fn representative(&self) -> Digraph {
        Digraph::from_valid_arcs(self.n, self.arcs.clone())
    }
}

/// Colour refinement seeded with the degree pair. Colours are ranks of sorted
/// signatures, so they do not depend on the input labelling.
fn refined_colours(d: &Digraph) -> Vec<usize> {
    let n = d.order();
    let mut outs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut ins: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in d.arcs() {
        outs[u].push(v);
        ins[v].push(u);
    }
    let deg = d.degrees();
    // Sources first, sinks last: paths canonicalise to 0 → 1 → … → n−1.
    let seeds: Vec<(usize, std::cmp::Reverse<usize>)> =
        (0..n).map(|u| (deg.in_degree[u], std::cmp::Reverse(deg.out_degree[u]))).collect();
    let mut colours = ranks(&seeds);
    let mut classes = count_distinct(&colours);
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut o: Vec<usize> = outs[u].iter().map(|&w| colours[w]).collect();
                let mut i: Vec<usize> = ins[u].iter().map(|&w| colours[w]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (colours[u], o, i)
            })
            .collect();
        let next = ranks(&sigs);
        let next_classes = count_distinct(&next);
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn ranks<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn count_distinct(colours: &[usize]) -> usize {
    colours.iter().copied().max().map_or(0, |m| m + 1)
}

/// Canonical form by exhaustive search over colour-preserving relabellings.
///
/// Cost is the product of colour-class factorials; fine for the small orders
/// used in exhaustive sweeps (n ≤ 10).
pub fn canonical_form(d: &Digraph) -> CanonicalForm {
    let n = d.order();
    let colours = refined_colours(d);
    let k = count_distinct(&colours);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (u, &c) in colours.iter().enumerate() {
        classes[c].push(u);
    }
    // Class c occupies positions start[c]..start[c]+len.
    let mut start = Vec::with_capacity(k);
    let mut acc = 0;
    for c in &classes {
        start.push(acc);
        acc += c.len();
    }

    let mut search = Search {
        digraph: d,
        classes,
        start,
        position: vec![0; n],
        scratch: Vec::with_capacity(d.arc_count()),
        best: None,
    };
    search.run(0);
    CanonicalForm { n, arcs: search.best.unwrap_or_default() }
}

struct Search<'a> {
    digraph: &'a Digraph,
    classes: Vec<Vec<usize>>,
    start: Vec<usize>,
    position: Vec<usize>,
    scratch: Vec<Arc>,
    best: Option<Vec<Arc>>,
}

impl Search<'_> {
    fn run(&mut self, class: usize) {
        if class == self.classes.len() {
            self.evaluate();
            return;
        }
        let mut members = self.classes[class].clone();
        self.permute(class, &mut members, 0);
    }

    fn permute(&mut self, class: usize, members: &mut [usize], k: usize) {
        if k == members.len() {
            let base = self.start[class];
            for (offset, &u) in members.iter().enumerate() {
                self.position[u] = base + offset;
            }
            self.run(class + 1);
            return;
        }
        for i in k..members.len() {
            members.swap(k, i);
            self.permute(class, members, k + 1);
            members.swap(k, i);
        }
    }

    fn evaluate(&mut self) {
        self.scratch.clear();
        self.scratch.extend(self.digraph.arcs().iter().map(|&(u, v)| (self.position[u], self.position[v])));
        self.scratch.sort_unstable();
        match &mut self.best {
            Some(best) if *best <= self.scratch => {}
            Some(best) => best.clone_from(&self.scratch),
            None => self.best = Some(self.scratch.clone()),
        }
    }
}

/// True iff some vertex bijection maps the arcs of `a` onto those of `b`.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    let degree_profile = |d: &Digraph| {
        let deg = d.degrees();
        let mut p: Vec<(usize, usize)> = deg.out_degree.iter().copied().zip(deg.in_degree.iter().copied()).collect();
        p.sort_unstable();
        p
    };
    if degree_profile(a) != degree_profile(b) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, arcs: &[Arc]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn relabelled_path() {
        let p = d(3, &[(0, 1), (1, 2)]);
        let q = d(3, &[(2, 0), (0, 1)]);
        assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn reversed_labels_path() {
        let p = d(3, &[(0, 1), (1, 2)]);
        let r = d(3, &[(1, 0), (2, 1)]);
        assert!(is_isomorphic(&p, &r));
    }

    #[test]
    fn path_versus_in_star() {
        let p = d(3, &[(0, 1), (1, 2)]);
        let s = d(3, &[(1, 0), (2, 0)]);
        assert!(!is_isomorphic(&p, &s));
        assert!(!is_isomorphic(&p, &d(4, &[(0, 1), (1, 2)])));
    }

    #[test]
    fn opposite_cycle_orientations_are_isomorphic() {
        let c = d(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let r = d(4, &[(1, 0), (2, 1), (3, 2), (0, 3)]);
        assert!(is_isomorphic(&c, &r));
    }

    #[test]
    fn refinement_does_not_merge_distinct_regular_digraphs() {
        // C6 versus two disjoint C3: identical colourings, different structure.
        let c6 = d(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_c3 = d(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&c6, &two_c3));
    }

    #[test]
    fn paths_and_cycles_have_natural_representatives() {
        let p = d(4, &[(2, 0), (3, 2), (0, 1)]);
        assert_eq!(canonical_form(&p).representative().arcs(), &[(0, 1), (1, 2), (2, 3)]);
        let c = d(4, &[(2, 0), (3, 2), (0, 1), (1, 3)]);
        assert_eq!(canonical_form(&c).representative().arcs(), &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    }

    #[test]
    fn representative_is_isomorphic_to_source() {
        let g = d(5, &[(0, 1), (0, 2), (3, 2), (4, 3), (1, 4)]);
        let rep = canonical_form(&g).representative();
        assert!(is_isomorphic(&g, &rep));
        assert_eq!(canonical_form(&rep), canonical_form(&g));
    }
}
