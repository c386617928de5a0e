use crate::field::Field;
use crate::linalg::{unit, Matrix, Subspace};
use crate::pathalg::FiniteDimAlgebra;
use crate::repmod::ModuleRep;

/// A two-sided ideal of `Π`, stored as a subspace in reduced echelon form.
///
/// Ideals built here are spanned by vectors from single blocks
/// `e_i Π e_j`, so every echelon row lies in one block and
/// `e_i I e_j` is spanned by the rows in that block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal<E> {
    space: Subspace<E>,
}

impl<E: Clone> Ideal<E> {
    pub fn space(&self) -> &Subspace<E> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    fn block_of(&self, v: &[F::Elem]) -> Option<(usize, usize)> {
        let f = self.field();
        v.iter()
            .position(|x| !f.is_zero(x))
            .map(|k| (self.basis()[k].target, self.basis()[k].source))
    }

    /// Rows of `I` lying in `e_i Π`.
    pub fn ideal_rows_at(&self, ideal: &Ideal<F::Elem>, i: usize) -> Vec<usize> {
        ideal
            .space
            .basis()
            .iter()
            .enumerate()
            .filter(|(_, v)| self.block_of(v).map(|b| b.0) == Some(i))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn zero_ideal(&self) -> Ideal<F::Elem> {
        Ideal {
            space: Subspace::new(self.dim()),
        }
    }

    pub fn unit_ideal(&self) -> Ideal<F::Elem> {
        Ideal {
            space: Subspace::full(self.field(), self.dim()),
        }
    }

    /// Closes a set of block-homogeneous vectors under left and right
    /// multiplication by arrows.
    pub fn two_sided_closure(&self, gens: impl IntoIterator<Item = Vec<F::Elem>>) -> Ideal<F::Elem> {
        self.closure(gens, true, true)
    }

    fn closure(&self, gens: impl IntoIterator<Item = Vec<F::Elem>>, left: bool, right: bool) -> Ideal<F::Elem> {
        let f = self.field();
        let mut space = Subspace::new(self.dim());
        let mut frontier = Vec::new();
        for g in gens {
            if space.insert(f, g.clone()) {
                frontier.push(g);
            }
        }
        while let Some(v) = frontier.pop() {
            for a in 0..self.arrow_count() {
                if left {
                    let w = self.mul_arrow_left(a, &v);
                    if space.insert(f, w.clone()) {
                        frontier.push(w);
                    }
                }
                if right {
                    let w = self.mul_arrow_right(&v, a);
                    if space.insert(f, w.clone()) {
                        frontier.push(w);
                    }
                }
            }
        }
        Ideal { space }
    }

    /// `Π (1 - Σ_{j ∈ S} e_j) Π`; `I_i` is `vertex_ideal(&[i])`.
    pub fn vertex_ideal(&self, s: &[usize]) -> Ideal<F::Elem> {
        let gens: Vec<_> = (0..self.rank())
            .filter(|j| !s.contains(j))
            .map(|j| self.idempotent(j))
            .collect();
        self.two_sided_closure(gens)
    }

    /// `I_i · J = Π ((1 - e_i) J)` for a two-sided ideal `J`.
    pub fn vertex_ideal_times(&self, i: usize, j: &Ideal<F::Elem>) -> Ideal<F::Elem> {
        let gens: Vec<_> = j
            .space
            .basis()
            .iter()
            .filter(|v| self.block_of(v).map(|b| b.0) != Some(i))
            .cloned()
            .collect();
        self.closure(gens, true, false)
    }

    /// `I J`, spanned by `g y` for right-module generators `g` of `I` and
    /// basis vectors `y` of `J`.
    pub fn ideal_product(&self, i: &Ideal<F::Elem>, j: &Ideal<F::Elem>) -> Ideal<F::Elem> {
        let f = self.field();
        let mut rad = Subspace::new(self.dim());
        for v in i.space.basis() {
            for a in 0..self.arrow_count() {
                rad.insert(f, self.mul_arrow_right(v, a));
            }
        }
        let gens: Vec<Vec<F::Elem>> = i
            .space
            .basis()
            .iter()
            .filter(|v| rad.insert(f, (*v).clone()))
            .cloned()
            .collect();
        let mut space = Subspace::new(self.dim());
        for g in &gens {
            for y in j.space.basis() {
                space.insert(f, self.mul(g, y));
            }
        }
        Ideal { space }
    }

    /// `I J` as the span of all products of basis vectors.
    pub fn ideal_product_naive(&self, i: &Ideal<F::Elem>, j: &Ideal<F::Elem>) -> Ideal<F::Elem> {
        let f = self.field();
        let mut space = Subspace::new(self.dim());
        for x in i.space.basis() {
            for y in j.space.basis() {
                space.insert(f, self.mul(x, y));
            }
        }
        Ideal { space }
    }

    /// Closed under multiplication by arrows on both sides.
    pub fn is_two_sided_ideal(&self, i: &Ideal<F::Elem>) -> bool {
        let f = self.field();
        i.space.basis().iter().all(|v| {
            (0..self.arrow_count()).all(|a| {
                i.space.contains(f, &self.mul_arrow_left(a, v)) && i.space.contains(f, &self.mul_arrow_right(v, a))
            })
        })
    }

    /// `e_i I` as a right module.
    pub fn ideal_block(&self, ideal: &Ideal<F::Elem>, i: usize) -> ModuleRep<F::Elem> {
        let f = self.field();
        let n = self.rank();
        let rows = self.ideal_rows_at(ideal, i);
        let basis = ideal.space.basis();
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &r in &rows {
            let (_, s) = self.block_of(&basis[r]).unwrap();
            at[s].push(r);
        }
        let dims: Vec<usize> = at.iter().map(|v| v.len()).collect();
        let actions = (0..self.arrow_count())
            .map(|a| {
                let (t, s) = self.arrow_ends(a);
                let cols: Vec<Vec<F::Elem>> = at[t]
                    .iter()
                    .map(|&r| {
                        let w = self.mul_arrow_right(&basis[r], a);
                        let coords = ideal.space.coordinates(f, &w).expect("ideal is closed");
                        at[s].iter().map(|&x| coords[x].clone()).collect()
                    })
                    .collect();
                if cols.is_empty() {
                    Matrix::zeros(f, dims[s], 0)
                } else {
                    Matrix::from_columns(dims[s], &cols)
                }
            })
            .collect();
        self.module(dims, actions).expect("blocks of an ideal are modules")
    }

    /// The ideal as a right module, `⊕_i e_i I`.
    pub fn ideal_module(&self, ideal: &Ideal<F::Elem>) -> ModuleRep<F::Elem> {
        let blocks: Vec<_> = (0..self.rank()).map(|i| self.ideal_block(ideal, i)).collect();
        self.direct_sum(&blocks)
    }

    /// `e_i Π` inside `Π`, handy for tests.
    pub fn right_ideal_of_idempotent(&self, i: usize) -> Subspace<F::Elem> {
        let f = self.field();
        Subspace::spanned_by(
            f,
            self.dim(),
            (0..self.rank()).flat_map(|k| self.block(i, k).iter().map(|&p| unit(f, self.dim(), p))),
        )
    }
}
