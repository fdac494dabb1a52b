//! Verification of a claimed Hermite pair `(U, H)` for an input `A`.

use ore_hermite::matrix::{inverse_unimodular, is_hermite};
use ore_hermite::{Error, OreMatrix};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub product_ok: bool,
    pub shape_ok: bool,
    pub unimodular_ok: bool,
    pub degree_bounds_ok: bool,
    pub details: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.product_ok && self.shape_ok && self.unimodular_ok && self.degree_bounds_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "productOk": self.product_ok,
            "shapeOk": self.shape_ok,
            "unimodularOk": self.unimodular_ok,
            "degreeBoundsOk": self.degree_bounds_ok,
            "passed": self.passed(),
            "details": self.details,
        })
    }

    pub fn to_text(&self) -> String {
        let flag = |b: bool| if b { "ok" } else { "FAILED" };
        let mut out = format!(
            "product U*A = H: {}\nHermite shape: {}\nU unimodular: {}\ndegree bounds: {}\n",
            flag(self.product_ok),
            flag(self.shape_ok),
            flag(self.unimodular_ok),
            flag(self.degree_bounds_ok),
        );
        for d in &self.details {
            out.push_str("  ");
            out.push_str(d);
            out.push('\n');
        }
        out
    }
}

/// Checks `U·A = H`, that `H` is in Hermite form, that `U` is unimodular,
/// and the degree caps `deg H ≤ nd`, `deg U ≤ (n-1)d`, `deg U⁻¹ ≤ d` with
/// `d = deg_D A`.
pub fn verify(a: &OreMatrix, u: &OreMatrix, h: &OreMatrix) -> VerificationReport {
    let mut details = Vec::new();
    let square = a.is_square() && u.is_square() && h.is_square();
    let n = a.rows();
    let same_size = square && u.rows() == n && h.rows() == n;
    if !same_size {
        details.push(format!(
            "expected square matrices of one size, got A {}x{}, U {}x{}, H {}x{}",
            a.rows(),
            a.cols(),
            u.rows(),
            u.cols(),
            h.rows(),
            h.cols()
        ));
    }

    let product_ok = match u.mul(a) {
        Ok(p) if p == *h => true,
        Ok(p) => {
            if let Some((i, j)) = first_difference(&p, h) {
                details.push(format!("U*A differs from H at entry ({}, {})", i + 1, j + 1));
            } else {
                details.push("U*A and H have different shapes".into());
            }
            false
        }
        Err(e) => {
            details.push(format!("cannot form U*A: {e}"));
            false
        }
    };

    let shape_ok = is_hermite(h);
    if !shape_ok {
        details.push("H is not upper triangular with monic diagonal and reduced off-diagonal entries".into());
    }

    let inverse = if u.is_square() {
        match inverse_unimodular(u) {
            Ok(v) => Some(v),
            Err(Error::NotUnimodular) => {
                details.push("the Hermite form of U is not the identity".into());
                None
            }
            Err(e) => {
                details.push(format!("unimodularity check failed: {e}"));
                None
            }
        }
    } else {
        details.push("U is not square".into());
        None
    };
    let unimodular_ok = inverse.is_some();

    let d = a.deg_d().or_zero();
    let mut degree_bounds_ok = same_size;
    if same_size {
        if !h.deg_d().at_most(n * d) {
            details.push(format!("deg_D H = {} exceeds n*d = {}", h.deg_d(), n * d));
            degree_bounds_ok = false;
        }
        if !u.deg_d().at_most((n - 1) * d) {
            details.push(format!("deg_D U = {} exceeds (n-1)*d = {}", u.deg_d(), (n - 1) * d));
            degree_bounds_ok = false;
        }
        if let Some(v) = &inverse {
            if !v.deg_d().at_most(d) {
                details.push(format!("deg_D U^-1 = {} exceeds d = {d}", v.deg_d()));
                degree_bounds_ok = false;
            }
        }
    }

    VerificationReport {
        product_ok,
        shape_ok,
        unimodular_ok,
        degree_bounds_ok,
        details,
    }
}

fn first_difference(x: &OreMatrix, y: &OreMatrix) -> Option<(usize, usize)> {
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return None;
    }
    (0..x.rows())
        .flat_map(|i| (0..x.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| x.get(i, j) != y.get(i, j))
}
