use serde::Serialize;

use crate::error::{Error, Result};

/// The staircase degree function `δ(n) = (n - r) d / p + r` with
/// `r = n mod p`: degree `d` is gained once per period `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeltaFunction {
    pub p: usize,
    pub d: usize,
}

impl DeltaFunction {
    pub fn new(p: usize, d: usize) -> Result<Self> {
        if p < 2 || d < p {
            return Err(Error::input(format!("need d >= p >= 2, got p = {p}, d = {d}")));
        }
        Ok(Self { p, d })
    }

    #[inline]
    pub fn eval(&self, n: usize) -> usize {
        let r = n % self.p;
        (n - r) / self.p * self.d + r
    }

    /// `δ(i + j) = δ(i) + δ(j)`.
    pub fn is_additive(&self, i: usize, j: usize) -> bool {
        self.eval(i + j) == self.eval(i) + self.eval(j)
    }
}

pub fn delta(f: DeltaFunction, n: usize) -> usize {
    f.eval(n)
}
