use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{deform_comodule_algebra, tensor_mul, ComoduleAlgebra, FiniteAlgebra};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};
use crate::uqsl2::{monomial_label, PbwIndex, Sl2Context};
use crate::Cyclo;
use num_traits::Zero;

use super::params::{FamilyParams, FamilyTag};

/// Normal-ordered basis `X^a Y^b G^c` (`a < nx`, `b < ny`, `c < r`) of a
/// family algebra. `L4` uses `nx = N` with the generator named `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyShape {
    pub n: usize,
    pub nx: usize,
    pub ny: usize,
    pub r: usize,
    pub single_generator: bool,
}

impl FamilyShape {
    pub fn of<F: Field>(p: &FamilyParams<F>, n: usize) -> Result<Self> {
        p.validate(n)?;
        let r = p.r.unwrap_or(1);
        let (nx, ny) = match p.family {
            FamilyTag::L0 => (1, 1),
            FamilyTag::L1 | FamilyTag::L4 => (n, 1),
            FamilyTag::L2 => (1, n),
            FamilyTag::L3 | FamilyTag::L3N => (n, n),
        };
        Ok(FamilyShape {
            n,
            nx,
            ny,
            r,
            single_generator: p.family == FamilyTag::L4,
        })
    }

    pub fn dim(&self) -> usize {
        self.nx * self.ny * self.r
    }

    pub fn index(&self, a: usize, b: usize, c: usize) -> usize {
        debug_assert!(a < self.nx && b < self.ny && c < self.r);
        (a * self.ny + b) * self.r + c
    }

    pub fn exponents(&self, idx: usize) -> (usize, usize, usize) {
        (
            idx / (self.ny * self.r),
            (idx / self.r) % self.ny,
            idx % self.r,
        )
    }

    pub fn has_x(&self) -> bool {
        self.nx > 1
    }

    pub fn has_y(&self) -> bool {
        self.ny > 1
    }

    pub fn has_g(&self) -> bool {
        self.r > 1
    }

    pub fn labels(&self) -> Vec<String> {
        let x = if self.single_generator { "W" } else { "X" };
        (0..self.dim())
            .map(|i| {
                let (a, b, c) = self.exponents(i);
                monomial_label(&[(x, a), ("Y", b), ("G", c)])
            })
            .collect()
    }
}

/// Left multiplication by the generators on the normal-ordered basis.
struct Rules<'a> {
    ctx: &'a Sl2Context,
    shape: FamilyShape,
    xi: Cyclo,
    zeta: Cyclo,
    /// `Y X^a = q^{−2a} X^a Y + t_a X^{a−1} G^{−2}`
    t: Vec<Cyclo>,
}

impl Rules<'_> {
    fn omega_pow(&self, e: i64) -> Cyclo {
        let step = 2 * (self.shape.n / self.shape.r) as i64;
        self.ctx.field().q_pow(step * e)
    }

    fn left_g(&self, v: &Vector<Cyclo>) -> Vector<Cyclo> {
        let s = self.shape;
        let mut out = Vector::new();
        for (&i, c) in v {
            let (a, b, g) = s.exponents(i);
            let w = self.omega_pow(a as i64 - b as i64);
            sparse::add_term(&mut out, s.index(a, b, (g + 1) % s.r), c.mul_ref(&w));
        }
        out
    }

    fn left_x(&self, v: &Vector<Cyclo>) -> Vector<Cyclo> {
        let s = self.shape;
        let mut out = Vector::new();
        for (&i, c) in v {
            let (a, b, g) = s.exponents(i);
            if a + 1 < s.nx {
                sparse::add_term(&mut out, s.index(a + 1, b, g), c.clone());
            } else {
                sparse::add_term(&mut out, s.index(0, b, g), c.mul_ref(&self.xi));
            }
        }
        out
    }

    fn left_y(&self, v: &Vector<Cyclo>) -> Vector<Cyclo> {
        let s = self.shape;
        let field = self.ctx.field();
        let mut out = Vector::new();
        for (&i, c) in v {
            let (a, b, g) = s.exponents(i);
            let w = c.mul_ref(&field.q_pow(-2 * a as i64));
            if b + 1 < s.ny {
                sparse::add_term(&mut out, s.index(a, b + 1, g), w);
            } else {
                sparse::add_term(&mut out, s.index(a, 0, g), w.mul_ref(&self.zeta));
            }
            if a > 0 && !self.t[a].is_zero() {
                let w = c.mul_ref(&self.t[a]).mul_ref(&self.omega_pow(2 * b as i64));
                sparse::add_term(&mut out, s.index(a - 1, b, (g + s.r - 2 % s.r) % s.r), w);
            }
        }
        out
    }

    fn product(&self, i: usize, j: usize) -> Vector<Cyclo> {
        let (a, b, c) = self.shape.exponents(i);
        let mut v = sparse::basis(j);
        for _ in 0..c {
            v = self.left_g(&v);
        }
        for _ in 0..b {
            v = self.left_y(&v);
        }
        for _ in 0..a {
            v = self.left_x(&v);
        }
        v
    }
}

fn gr_element(n: usize, terms: &[((usize, usize, usize), Cyclo)]) -> Vector<Cyclo> {
    let mut v = Vector::new();
    for ((i, j, k), c) in terms {
        sparse::add_term(&mut v, PbwIndex::new(*i, *j, *k).to_index(n), c.clone());
    }
    v
}

fn pure(h: &Vector<Cyclo>, a: usize) -> TensorVector<Cyclo> {
    h.iter().map(|(i, c)| ((*i, a), c.clone())).collect()
}

/// The family algebra over `gr(u_q)` with coaction extended
/// multiplicatively from `δ(X) = x⊗1 + g⁻¹⊗X`, `δ(Y) = y⊗1 + g⁻¹⊗Y`,
/// `δ(G) = g^{N/r}⊗G`, `δ(W) = (αx + βy)⊗1 + g⁻¹⊗W`.
pub fn build_family(ctx: &Sl2Context, p: &FamilyParams<Cyclo>) -> Result<ComoduleAlgebra<Cyclo>> {
    let n = ctx.n();
    let shape = FamilyShape::of(p, n)?;
    let field = ctx.field();
    let get = |o: &Option<Cyclo>| o.clone().unwrap_or_else(|| field.zero());
    let eta = get(&p.eta);
    let mut t = vec![field.zero(); n + 1];
    if !eta.is_zero() {
        for a in 0..n {
            t[a + 1] = field.q_pow(-2 * a as i64 - 2) * &eta + field.q_pow(-4) * &t[a];
        }
        if !t[n].is_zero() {
            return Err(Error::RelationFailed("Y X^N differs from X^N Y".into()));
        }
    }
    let rules = Rules {
        ctx,
        shape,
        xi: get(&p.xi),
        zeta: get(&p.zeta),
        t,
    };
    let d = shape.dim();
    let algebra =
        FiniteAlgebra::from_fn(shape.labels(), sparse::basis(0), |i, j| rules.product(i, j));

    let gr = ctx.gr();
    let one = field.one();
    let g_inv = gr_element(n, &[((0, 0, n - 1), one.clone())]);
    let x_part = if shape.single_generator {
        gr_element(n, &[((1, 0, 0), get(&p.alpha)), ((0, 1, 0), get(&p.beta))])
    } else {
        gr_element(n, &[((1, 0, 0), one.clone())])
    };
    let y_part = gr_element(n, &[((0, 1, 0), one.clone())]);
    let g_part = gr_element(n, &[((0, 0, (n / shape.r) % n), one.clone())]);
    let unit_h = gr.one();

    let gen = |part: &Vector<Cyclo>, idx: usize, skew: bool| {
        let mut t = TensorVector::new();
        for (h, c) in part {
            sparse::add_term(&mut t, (*h, 0), c.clone());
        }
        if skew {
            sparse::axpy(&mut t, &one, &pure(&g_inv, idx));
        }
        t
    };
    let delta_x = shape
        .has_x()
        .then(|| gen(&x_part, shape.index(1, 0, 0), true));
    let delta_y = shape
        .has_y()
        .then(|| gen(&y_part, shape.index(0, 1, 0), true));
    let delta_g = shape.has_g().then(|| pure(&g_part, shape.index(0, 0, 1)));

    let mut coaction: Vec<TensorVector<Cyclo>> = Vec::with_capacity(d);
    for idx in 0..d {
        let (a, b, c) = shape.exponents(idx);
        let value = if a > 0 {
            tensor_mul(
                gr.algebra(),
                &algebra,
                delta_x.as_ref().expect("X"),
                &coaction[shape.index(a - 1, b, c)],
            )
        } else if b > 0 {
            tensor_mul(
                gr.algebra(),
                &algebra,
                delta_y.as_ref().expect("Y"),
                &coaction[shape.index(0, b - 1, c)],
            )
        } else if c > 0 {
            tensor_mul(
                gr.algebra(),
                &algebra,
                delta_g.as_ref().expect("G"),
                &coaction[shape.index(0, 0, c - 1)],
            )
        } else {
            pure(&unit_h, 0)
        };
        coaction.push(value);
    }
    let table = coaction
        .into_iter()
        .map(|t| t.into_iter().map(|((h, b), c)| (h, b, c)).collect())
        .collect();
    Ok(ComoduleAlgebra::new(algebra, Arc::clone(gr), table)?.with_params(p.clone()))
}

/// The cocycle deformation of [`build_family`] by `σ`, over `u_q`.
pub fn deform_family(ctx: &Sl2Context, p: &FamilyParams<Cyclo>) -> Result<ComoduleAlgebra<Cyclo>> {
    let l = build_family(ctx, p)?;
    deform_comodule_algebra(&l, ctx.sigma(), Arc::clone(ctx.uq()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Mode;

    fn check(ctx: &Sl2Context, p: FamilyParams<Cyclo>, dim: usize) {
        let a = build_family(ctx, &p).unwrap();
        assert_eq!(a.dim(), dim);
        let r = a.verify(&Mode::Exhaustive);
        assert!(r.passed(), "{:?}: {:?}", p.family, r.first_failure());
    }

    #[test]
    fn families_at_3_are_comodule_algebras() {
        let ctx = Sl2Context::new(3).unwrap();
        let f = ctx.field().clone();
        check(&ctx, FamilyParams::l0(1), 1);
        check(&ctx, FamilyParams::l0(3), 3);
        check(&ctx, FamilyParams::l1(3, f.int(2)), 9);
        check(&ctx, FamilyParams::l2(3, f.q()), 9);
        check(&ctx, FamilyParams::l3(1, f.int(1), f.int(-1)), 9);
        check(&ctx, FamilyParams::l3(3, f.q(), f.int(5)), 27);
        check(
            &ctx,
            FamilyParams::l3n(3, f.int(2), f.q(), f.q_pow(2) + f.int(1)),
            27,
        );
        check(&ctx, FamilyParams::l4(f.one(), f.one(), f.zero()), 3);
        check(&ctx, FamilyParams::l4(f.q(), f.int(3), f.int(7)), 3);
    }

    #[test]
    fn l3n_commutator() {
        let ctx = Sl2Context::new(3).unwrap();
        let f = ctx.field().clone();
        let eta = f.int(2);
        let a = build_family(&ctx, &FamilyParams::l3n(3, f.zero(), f.zero(), eta.clone())).unwrap();
        let b = |l: &str| sparse::basis::<Cyclo>(a.index_of(l).unwrap());
        let lhs = sparse::sub(
            &a.mul(&b("X"), &b("Y")),
            &sparse::scale(&a.mul(&b("Y"), &b("X")), &f.q_pow(2)),
        );
        assert_eq!(lhs, sparse::scale(&b("G"), &-eta));
    }
}
