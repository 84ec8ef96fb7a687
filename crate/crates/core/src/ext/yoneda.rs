//! Yoneda products by lifting cocycles to chain maps.
//!
//! A class `ξ ∈ Ext^n(M, A_0)` of shift `j` is a functional on the
//! generators of `P_n(M)` supported in degree `j`. It lifts to maps
//! `ξ_i : P_{n+i}(M) -> P_i(A_0)` lowering internal degree by `j`, with
//! `d ξ_i = ξ_{i-1} d`. For `η ∈ Ext^m(A_0, A_0)` the product is
//! `η·ξ = η ∘ ξ_m`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modules::ModuleSpec;
use crate::resolution::Resolution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtClass {
    pub degree: usize,
    pub shift: usize,
    /// One coefficient per generator of `P_degree`.
    pub coeffs: Vec<u32>,
}

impl ExtClass {
    /// The class dual to generator `g` of `P_n`.
    pub fn dual(r: &Resolution, n: usize, g: usize) -> Self {
        let m = r.module(n);
        let mut coeffs = vec![0; m.rank()];
        coeffs[g] = 1;
        Self { degree: n, shift: m.generators[g].degree, coeffs }
    }

    pub fn zero(r: &Resolution, n: usize, shift: usize) -> Self {
        Self { degree: n, shift, coeffs: vec![0; r.module(n).rank()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Checks the coefficients only touch generators of degree `shift`.
    pub fn is_homogeneous(&self, r: &Resolution) -> bool {
        self.coeffs.iter().zip(&r.module(self.degree).generators).all(|(&c, g)| c == 0 || g.degree == self.shift)
    }
}

/// Dual basis of `Ext^n`, in generator order.
pub fn ext_basis(r: &Resolution, n: usize) -> Vec<ExtClass> {
    (0..r.module(n).rank()).map(|g| ExtClass::dual(r, n, g)).collect()
}

/// The maps `ξ_0, ..., ξ_depth` of a lifted class.
#[derive(Clone, Debug)]
pub struct Lift {
    pub degree: usize,
    pub shift: usize,
    // maps[i][g]: image of generator g of P_{degree+i}(M), in slice
    // (deg g - shift, vertex g) of P_i(A_0); empty when deg g < shift
    maps: Vec<Vec<Vec<u32>>>,
}

impl Lift {
    pub fn depth(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn image(&self, i: usize, g: usize) -> &[u32] {
        &self.maps[i][g]
    }
}

fn require_trivial(target: &Resolution) -> Result<()> {
    if *target.spec() != ModuleSpec::trivial(target.algebra()) || target.origins(0).is_none() {
        return Err(Error::input("Yoneda products need the resolution of the trivial module as target"));
    }
    Ok(())
}

fn require_certified(r: &Resolution, n: usize, what: &str) -> Result<()> {
    if n > r.max_hdeg() || !r.is_certified(n) {
        return Err(Error::refusal(format!(
            "{what} needs homological degree {n}, but the resolution is certified only to {}",
            r.certified_to().map_or("nothing".to_string(), |c| c.to_string())
        )));
    }
    Ok(())
}

/// Lifts `class` (on `source`) through the resolution `target` of `A_0`.
/// With `perturb` set, each lift step adds a fixed combination of kernel
/// vectors, giving a different but homotopic chain map.
pub fn lift_class(
    source: &Resolution,
    target: &Resolution,
    class: &ExtClass,
    depth: usize,
    perturb: bool,
) -> Result<Lift> {
    require_trivial(target)?;
    require_certified(source, class.degree + depth, "lifting")?;
    require_certified(target, depth, "lifting")?;
    let alg = &**target.algebra();
    let field = alg.field();
    let n = class.degree;
    let j = class.shift;
    let p0 = target.module(0);

    let mut maps: Vec<Vec<Vec<u32>>> = Vec::with_capacity(depth + 1);
    let src0 = source.module(n);
    let first = src0
        .generators
        .iter()
        .enumerate()
        .map(|(g, gen)| {
            if gen.degree < j {
                return Vec::new();
            }
            let slice = target.slices(0).get(gen.degree - j, gen.vertex);
            let mut v = vec![0; slice.len()];
            if class.coeffs[g] != 0 {
                let h = p0
                    .generators
                    .iter()
                    .position(|x| x.vertex == gen.vertex && x.degree == 0)
                    .expect("P_0 of A_0 has a generator per vertex");
                v[slice.generator_position(p0, h).unwrap()] = class.coeffs[g];
            }
            v
        })
        .collect();
    maps.push(first);

    for i in 1..=depth {
        let src = source.module(n + i);
        let d = source.differential(n + i);
        let src_prev_slices = source.slices(n + i - 1);
        let tgt_prev = target.module(i - 1);
        let tgt_prev_slices = target.slices(i - 1);
        let mut level = Vec::with_capacity(src.rank());
        for (g, gen) in src.generators.iter().enumerate() {
            if gen.degree < j {
                level.push(Vec::new());
                continue;
            }
            let k = gen.degree - j;
            let mut y = vec![0u32; tgt_prev_slices.get(k, gen.vertex).len()];
            let dslice = src_prev_slices.get(gen.degree, gen.vertex);
            for (pos, &c) in d.images[g].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (h, w) = dslice.entry(pos);
                let hgen = source.module(n + i - 1).generators[h];
                if hgen.degree < j {
                    continue;
                }
                let prev = &maps[i - 1][h];
                if prev.iter().all(|&x| x == 0) {
                    continue;
                }
                let z = tgt_prev_slices.right_multiply(alg, tgt_prev, prev, hgen.degree - j, hgen.vertex, gen.degree - hgen.degree, w);
                for (a, b) in y.iter_mut().zip(z) {
                    *a = field.mul_add(*a, c, b);
                }
            }
            let width = target.slices(i).get(k, gen.vertex).len();
            if y.iter().all(|&x| x == 0) && !perturb {
                level.push(vec![0; width]);
                continue;
            }
            let solver = target.solver(i, k, gen.vertex);
            let mut x = solver.solve(&y).ok_or_else(|| {
                Error::refusal(format!("chain map lift fails at stage {i}; the internal degree bound is too small"))
            })?;
            if perturb {
                for (t, kv) in solver.kernel_basis().iter().enumerate() {
                    let coef = (t as u32 % 5) + 1;
                    for (a, &b) in x.iter_mut().zip(kv) {
                        *a = field.mul_add(*a, coef, b);
                    }
                }
            }
            level.push(x);
        }
        maps.push(level);
    }
    Ok(Lift { degree: n, shift: j, maps })
}

/// `η ∘ ξ_m` for `η ∈ Ext^m(A_0, A_0)` on `target` and a lift of `ξ`.
pub fn compose(target: &Resolution, eta: &ExtClass, lift: &Lift, source: &Resolution) -> ExtClass {
    let alg_field = target.algebra().field();
    let m = eta.degree;
    let src = source.module(lift.degree + m);
    let pm = target.module(m);
    let mut coeffs = vec![0u32; src.rank()];
    for (g, gen) in src.generators.iter().enumerate() {
        if gen.degree != lift.shift + eta.shift {
            continue;
        }
        let img = &lift.maps[m][g];
        let slice = target.slices(m).get(gen.degree - lift.shift, gen.vertex);
        let mut acc = 0u32;
        for (h, &e) in eta.coeffs.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(pos) = slice.generator_position(pm, h) {
                acc = alg_field.mul_add(acc, e, img[pos]);
            }
        }
        coeffs[g] = acc;
    }
    ExtClass { degree: lift.degree + m, shift: lift.shift + eta.shift, coeffs }
}

/// Yoneda product `η·ξ` in `E(A)`.
pub fn yoneda_product(r: &Resolution, eta: &ExtClass, xi: &ExtClass) -> Result<ExtClass> {
    let lift = lift_class(r, r, xi, eta.degree, false)?;
    Ok(compose(r, eta, &lift, r))
}

/// Action `η·ζ` of `η ∈ E(A)` on `ζ ∈ Ext^*(M, A_0)`.
pub fn yoneda_action(trivial: &Resolution, eta: &ExtClass, module: &Resolution, zeta: &ExtClass) -> Result<ExtClass> {
    let lift = lift_class(module, trivial, zeta, eta.degree, false)?;
    Ok(compose(trivial, eta, &lift, module))
}

/// Lifts of basis classes, computed once and reused for many products.
pub struct YonedaCache<'r> {
    source: &'r Resolution,
    target: &'r Resolution,
    lifts: HashMap<(usize, usize), Lift>,
}

impl<'r> YonedaCache<'r> {
    pub fn new(source: &'r Resolution, target: &'r Resolution) -> Self {
        Self { source, target, lifts: HashMap::new() }
    }

    /// Products `e_h · ξ` for every basis class `e_h` of `Ext^m(A_0, A_0)`,
    /// where `ξ` is dual to generator `g` of `P_n(source)`.
    pub fn left_products(&mut self, m: usize, n: usize, g: usize) -> Result<Vec<ExtClass>> {
        let key = (n, g);
        if self.lifts.get(&key).is_none_or(|l| l.depth() < m) {
            let xi = ExtClass::dual(self.source, n, g);
            let lift = lift_class(self.source, self.target, &xi, m, false)?;
            self.lifts.insert(key, lift);
        }
        let lift = &self.lifts[&key];
        Ok(ext_basis(self.target, m).iter().map(|eta| compose(self.target, eta, lift, self.source)).collect())
    }
}
