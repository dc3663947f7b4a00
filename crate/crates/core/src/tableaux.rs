//! Young diagrams, r-tuples of diagrams, standard r-tableaux, the column
//! reading word, the inductive index map, hook products and stabilizers.
//!
//! Enumeration orders are fixed (lexicographic) so that downstream labels —
//! in particular primitive idempotents indexed by standard tableaux — are
//! reproducible across runs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};

/// A partition: weakly decreasing positive row lengths; empty is allowed.
pub type Partition = Vec<usize>;

pub fn is_valid_partition(p: &Partition) -> bool {
    p.windows(2).all(|w| w[0] >= w[1]) && p.iter().all(|&x| x > 0)
}

/// All partitions of n, lexicographically descending on part vectors.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            prefix.push(part);
            rec(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// An r-tuple of Young diagrams with n total cells.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RDiagram {
    pub components: Vec<Partition>,
}

impl RDiagram {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        for c in &components {
            if !is_valid_partition(c) {
                return Err(Error::InvalidPartition(format!("{c:?}")));
            }
        }
        Ok(RDiagram { components })
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(|c| c.iter().sum::<usize>()).sum()
    }

    /// Cells as (component, row, column), 0-based, row-major per component.
    pub fn cells(&self) -> Vec<(usize, usize, usize)> {
        let mut cells = Vec::new();
        for (nu, comp) in self.components.iter().enumerate() {
            for (row, &len) in comp.iter().enumerate() {
                for col in 0..len {
                    cells.push((nu, row, col));
                }
            }
        }
        cells
    }

    /// Text form `[(2,1)|()]`.
    pub fn canonical_string(&self) -> String {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        format!("[{}]", comps.join("|"))
    }
}

impl fmt::Display for RDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// All r-tuples of Young diagrams with n total cells, ordered lexicographically
/// on the sequence of component partitions (each partition compared by its
/// part vector, descending).
pub fn enumerate_rdiagrams(r: usize, n: usize) -> Vec<RDiagram> {
    assert!(r >= 1, "r must be positive");
    // Candidate partitions of every size 0..=n, lexicographically descending.
    let mut candidates: Vec<Partition> = (0..=n).flat_map(partitions_of).collect();
    candidates.sort();
    candidates.reverse();

    fn rec(
        r: usize,
        left: usize,
        candidates: &[Partition],
        prefix: &mut Vec<Partition>,
        out: &mut Vec<RDiagram>,
    ) {
        if prefix.len() == r {
            if left == 0 {
                out.push(RDiagram {
                    components: prefix.clone(),
                });
            }
            return;
        }
        let remaining = r - prefix.len();
        for cand in candidates {
            let size: usize = cand.iter().sum();
            if size > left {
                continue;
            }
            if remaining == 1 && size != left {
                continue;
            }
            prefix.push(cand.clone());
            rec(r, left - size, candidates, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, n, &candidates, &mut Vec::new(), &mut out);
    out
}

/// A filling of an [`RDiagram`] by 1..n, one number per cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RTableau {
    pub shape: RDiagram,
    /// Entries per component, row-major: `rows[nu][row][col]` is a 1-based label.
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl RTableau {
    pub fn new(shape: RDiagram, rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let n = shape.n();
        let mut seen = BTreeSet::new();
        if rows.len() != shape.r() {
            return Err(Error::ShapeMismatch(
                shape.canonical_string(),
                format!("{} components filled", rows.len()),
            ));
        }
        for (nu, comp) in shape.components.iter().enumerate() {
            if rows[nu].len() != comp.len() {
                return Err(Error::ShapeMismatch(
                    shape.canonical_string(),
                    format!("component {} has {} rows", nu + 1, rows[nu].len()),
                ));
            }
            for (row, &len) in comp.iter().enumerate() {
                if rows[nu][row].len() != len {
                    return Err(Error::ShapeMismatch(
                        shape.canonical_string(),
                        format!("row {} of component {}", row + 1, nu + 1),
                    ));
                }
                for &e in &rows[nu][row] {
                    if e < 1 || e > n || !seen.insert(e) {
                        return Err(Error::InvalidParameter(format!(
                            "filling is not a bijection onto 1..{n}"
                        )));
                    }
                }
            }
        }
        Ok(RTableau { shape, rows })
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn entry(&self, cell: (usize, usize, usize)) -> usize {
        self.rows[cell.0][cell.1][cell.2]
    }

    /// Increasing along every row and every column of every component.
    pub fn is_standard(&self) -> bool {
        for comp in &self.rows {
            for row in comp {
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    return false;
                }
            }
            for r in 1..comp.len() {
                for c in 0..comp[r].len() {
                    if comp[r - 1][c] >= comp[r][c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Row-reading word: rows left to right, top to bottom, component by component.
    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|comp| comp.iter().flatten().copied())
            .collect()
    }

    /// Text form `[[1,2],[3]|[]]`.
    pub fn canonical_string(&self) -> String {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "[]".to_string()
                } else {
                    comp.iter()
                        .map(|row| {
                            let inner: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                            format!("[{}]", inner.join(","))
                        })
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        format!("[{}]", comps.join("|"))
    }
}

impl fmt::Display for RTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// All standard tableaux of the given shape, sorted lexicographically by
/// row-reading word. The count is the dimension f^λ.
pub fn enumerate_standard_tableaux(shape: &RDiagram) -> Vec<RTableau> {
    let n = shape.n();
    let mut fill: Vec<Vec<usize>> = shape
        .components
        .iter()
        .map(|comp| vec![0; comp.len()])
        .collect();
    let mut rows: Vec<Vec<Vec<usize>>> = shape
        .components
        .iter()
        .map(|comp| comp.iter().map(|&len| vec![0; len]).collect())
        .collect();

    fn rec(
        shape: &RDiagram,
        next: usize,
        n: usize,
        fill: &mut [Vec<usize>],
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<RTableau>,
    ) {
        if next > n {
            out.push(RTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for (nu, comp) in shape.components.iter().enumerate() {
            for (row, &len) in comp.iter().enumerate() {
                let col = fill[nu][row];
                if col >= len {
                    continue;
                }
                // the cell above must already be filled
                if row > 0 && fill[nu][row - 1] <= col {
                    continue;
                }
                rows[nu][row][col] = next;
                fill[nu][row] += 1;
                rec(shape, next + 1, n, fill, rows, out);
                fill[nu][row] -= 1;
                rows[nu][row][col] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, n, &mut fill, &mut rows, &mut out);
    out.sort_by_key(|t| t.row_reading_word());
    out
}

/// Column reading word: each column of the first component bottom to top,
/// columns left to right, then the following components.
pub fn word_of(tableau: &RTableau) -> Result<Vec<usize>> {
    if !tableau.is_standard() {
        return Err(Error::NonStandardTableau(tableau.canonical_string()));
    }
    let mut word = Vec::new();
    for (nu, comp) in tableau.shape.components.iter().enumerate() {
        let ncols = comp.first().copied().unwrap_or(0);
        for col in 0..ncols {
            for row in (0..comp.len()).rev() {
                if col < comp[row] {
                    word.push(tableau.rows[nu][row][col]);
                }
            }
        }
    }
    Ok(word)
}

/// The shape of a standard tableau with each cell carrying its inductive index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexedShape {
    pub shape: RDiagram,
    /// `indices[nu][row][col]`, parallel to the tableau rows.
    pub indices: Vec<Vec<Vec<usize>>>,
}

impl IndexedShape {
    pub fn index(&self, cell: (usize, usize, usize)) -> usize {
        self.indices[cell.0][cell.1][cell.2]
    }

    pub fn total(&self) -> usize {
        self.indices
            .iter()
            .flat_map(|comp| comp.iter().flatten())
            .sum()
    }
}

/// Indices from the word: 1 has index 0; if k+1 sits to the left of k in the
/// word the index increases by one, otherwise it is inherited.
pub fn index_map(tableau: &RTableau) -> Result<IndexedShape> {
    let word = word_of(tableau)?;
    let n = tableau.n();
    let mut position = vec![0usize; n + 1];
    for (pos, &v) in word.iter().enumerate() {
        position[v] = pos;
    }
    let mut idx = vec![0usize; n + 1];
    for k in 1..n {
        idx[k + 1] = if position[k + 1] < position[k] {
            idx[k] + 1
        } else {
            idx[k]
        };
    }
    let indices = tableau
        .rows
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|row| row.iter().map(|&e| idx[e]).collect())
                .collect()
        })
        .collect();
    Ok(IndexedShape {
        shape: tableau.shape.clone(),
        indices,
    })
}

/// Product of the hook lengths over the cells of a partition.
pub fn hook_product(partition: &Partition) -> u64 {
    let mut prod: u64 = 1;
    for (row, &len) in partition.iter().enumerate() {
        for col in 0..len {
            let arm = len - col - 1;
            let leg = partition[row + 1..]
                .iter()
                .take_while(|&&below| below > col)
                .count();
            prod *= (arm + leg + 1) as u64;
        }
    }
    prod
}

/// Row and column stabilizers of one tableau component, as permutations of
/// the 1-based entry labels embedded into S_n.
pub fn stabilizers(component_rows: &[Vec<usize>], n: usize) -> (Vec<Perm>, Vec<Perm>) {
    let rows: Vec<Vec<usize>> = component_rows.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut cols: Vec<Vec<usize>> = Vec::new();
    for c in 0..ncols {
        cols.push(rows.iter().filter_map(|r| r.get(c).copied()).collect());
    }
    (
        group_of_line_permutations(&rows, n),
        group_of_line_permutations(&cols, n),
    )
}

/// All permutations preserving each line (row or column) setwise.
fn group_of_line_permutations(lines: &[Vec<usize>], n: usize) -> Vec<Perm> {
    let mut result = vec![Perm::identity(n)];
    for line in lines {
        if line.len() < 2 {
            continue;
        }
        let perms_of_line = all_perms(line.len());
        let mut next = Vec::with_capacity(result.len() * perms_of_line.len());
        for base in &result {
            for p in &perms_of_line {
                // send label line[i] to label line[p(i)]
                let mut images: Vec<usize> = (0..n).collect();
                for (i, &label) in line.iter().enumerate() {
                    images[label - 1] = line[p.apply(i)] - 1;
                }
                next.push(base.compose(&Perm::from_images(images)));
            }
        }
        result = next;
    }
    result
}

/// f^λ by the multinomial/hook formula, an independent cross-check of the
/// enumeration count.
pub fn dimension_by_hooks(shape: &RDiagram) -> u64 {
    let n = shape.n() as u64;
    let mut result = factorial(n);
    for comp in &shape.components {
        let size: u64 = comp.iter().sum::<usize>() as u64;
        result = result / factorial(size) * (factorial(size) / hook_product(comp));
    }
    result
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(comps: Vec<Partition>) -> RDiagram {
        RDiagram::new(comps).unwrap()
    }

    #[test]
    fn partitions_of_three() {
        assert_eq!(partitions_of(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn rdiagrams_r1_n3() {
        let ds = enumerate_rdiagrams(1, 3);
        assert_eq!(ds.len(), 3);
        assert_eq!(ds[0].components, vec![vec![3]]);
        assert_eq!(ds[1].components, vec![vec![2, 1]]);
        assert_eq!(ds[2].components, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn rdiagrams_r2_n2_order_matches_contract() {
        let ds = enumerate_rdiagrams(2, 2);
        let expect: Vec<Vec<Partition>> = vec![
            vec![vec![2], vec![]],
            vec![vec![1, 1], vec![]],
            vec![vec![1], vec![1]],
            vec![vec![], vec![2]],
            vec![vec![], vec![1, 1]],
        ];
        assert_eq!(
            ds.iter().map(|d| d.components.clone()).collect::<Vec<_>>(),
            expect
        );
    }

    #[test]
    fn rdiagrams_r2_n1() {
        let ds = enumerate_rdiagrams(2, 1);
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].components, vec![vec![1], vec![]]);
        assert_eq!(ds[1].components, vec![vec![], vec![1]]);
    }

    #[test]
    fn standard_tableaux_counts() {
        let d = diagram(vec![vec![2, 1]]);
        assert_eq!(enumerate_standard_tableaux(&d).len(), 2);
        let d = diagram(vec![vec![1], vec![1]]);
        assert_eq!(enumerate_standard_tableaux(&d).len(), 2);
        let d = diagram(vec![vec![2], vec![]]);
        assert_eq!(enumerate_standard_tableaux(&d).len(), 1);
    }

    #[test]
    fn words_of_standard_tableaux() {
        // rows [1,2],[3]: columns (1,3), (2) read bottom-up → (3,1,2)
        let d = diagram(vec![vec![2, 1]]);
        let t = RTableau::new(d, vec![vec![vec![1, 2], vec![3]]]).unwrap();
        assert_eq!(word_of(&t).unwrap(), vec![3, 1, 2]);

        let d = diagram(vec![vec![1, 1]]);
        let t = RTableau::new(d, vec![vec![vec![1], vec![2]]]).unwrap();
        assert_eq!(word_of(&t).unwrap(), vec![2, 1]);

        let d = diagram(vec![vec![1], vec![1]]);
        let t = RTableau::new(d, vec![vec![vec![1]], vec![vec![2]]]).unwrap();
        assert_eq!(word_of(&t).unwrap(), vec![1, 2]);
    }

    #[test]
    fn word_rejects_non_standard() {
        let d = diagram(vec![vec![2]]);
        let t = RTableau::new(d, vec![vec![vec![2, 1]]]).unwrap();
        assert!(matches!(word_of(&t), Err(Error::NonStandardTableau(_))));
    }

    #[test]
    fn index_of_word_312() {
        // word (3,1,2): i(1)=0, i(2)=0, i(3)=1 → the cell holding 3 carries 1
        let d = diagram(vec![vec![2, 1]]);
        let t = RTableau::new(d, vec![vec![vec![1, 2], vec![3]]]).unwrap();
        let idx = index_map(&t).unwrap();
        assert_eq!(idx.indices, vec![vec![vec![0, 0], vec![1]]]);
    }

    #[test]
    fn index_of_single_column() {
        let d = diagram(vec![vec![1, 1]]);
        let t = RTableau::new(d, vec![vec![vec![1], vec![2]]]).unwrap();
        let idx = index_map(&t).unwrap();
        assert_eq!(idx.indices, vec![vec![vec![0], vec![1]]]);
    }

    #[test]
    fn index_of_single_cell_is_zero() {
        let d = diagram(vec![vec![1], vec![]]);
        let t = RTableau::new(d, vec![vec![vec![1]], vec![]]).unwrap();
        assert_eq!(index_map(&t).unwrap().total(), 0);
    }

    #[test]
    fn hook_products() {
        assert_eq!(hook_product(&vec![2, 1]), 3);
        assert_eq!(hook_product(&vec![1]), 1);
        assert_eq!(hook_product(&vec![2, 2]), 12);
        assert_eq!(hook_product(&vec![3, 1]), 8);
        assert_eq!(hook_product(&vec![]), 1);
    }

    #[test]
    fn stabilizer_sizes() {
        let (r, c) = stabilizers(&[vec![1, 2]], 2);
        assert_eq!(r.len(), 2);
        assert_eq!(c.len(), 1);
        let (r, c) = stabilizers(&[vec![1], vec![2]], 2);
        assert_eq!(r.len(), 1);
        assert_eq!(c.len(), 2);
        let (r, c) = stabilizers(&[vec![1, 2], vec![3]], 3);
        assert_eq!(r.len(), 2);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn regular_representation_dimension() {
        for (r, n, expect) in [(1, 3, 6u64), (2, 2, 8), (2, 3, 48), (3, 2, 18)] {
            let total: u64 = enumerate_rdiagrams(r, n)
                .iter()
                .map(|d| {
                    let f = enumerate_standard_tableaux(d).len() as u64;
                    f * f
                })
                .sum();
            assert_eq!(total, expect, "at (r,n)=({r},{n})");
        }
    }

    #[test]
    fn enumeration_agrees_with_hook_formula() {
        for (r, n) in [(1, 4), (2, 3), (3, 2)] {
            for d in enumerate_rdiagrams(r, n) {
                let by_enum = enumerate_standard_tableaux(&d).len() as u64;
                assert_eq!(by_enum, dimension_by_hooks(&d), "shape {d}");
            }
        }
    }

    #[test]
    fn word_is_permutation_and_indices_nonnegative() {
        for d in enumerate_rdiagrams(2, 3) {
            for t in enumerate_standard_tableaux(&d) {
                let mut w = word_of(&t).unwrap();
                w.sort_unstable();
                assert_eq!(w, (1..=3).collect::<Vec<_>>());
                let idx = index_map(&t).unwrap();
                for (nu, comp) in t.rows.iter().enumerate() {
                    for (row, line) in comp.iter().enumerate() {
                        for (col, &e) in line.iter().enumerate() {
                            if e == 1 {
                                assert_eq!(idx.indices[nu][row][col], 0);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serialization_forms() {
        let d = diagram(vec![vec![2, 1], vec![]]);
        assert_eq!(d.canonical_string(), "[(2,1)|()]");
        let t = RTableau::new(d, vec![vec![vec![1, 2], vec![3]], vec![]]).unwrap();
        assert_eq!(t.canonical_string(), "[[1,2],[3]|[]]");
    }
}
