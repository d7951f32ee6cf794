//! Small integer quadratic polynomials in several variables, with an exact
//! enumerator for their lattice solution sets.
//!
//! Every counting polynomial in this crate is monotone decreasing in each
//! coordinate (all quadratic coefficients nonpositive, all linear
//! coefficients strictly negative once restricted to the coordinates that
//! actually vary). That makes exhaustive enumeration of `{k | P(k) >= bound}`
//! finite and cheap, with exact pruning.

/// Quadratic polynomial `sum q_ij k_i k_j + sum l_i k_i + c` with integer
/// coefficients; `quad` stores the upper triangle including the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPoly {
    nvars: usize,
    quad: Vec<i64>,
    lin: Vec<i64>,
    constant: i64,
}

/// Where an original polynomial slot goes under restriction: pinned to zero
/// or mapped to a (possibly shared) variable of the restricted polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Zero,
    Var(usize),
}

impl KPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            quad: vec![0; nvars * (nvars + 1) / 2],
            lin: vec![0; nvars],
            constant: 0,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        // row-major upper triangle
        i * self.nvars - i * (i + 1) / 2 + j
    }

    pub fn add_quad(&mut self, i: usize, j: usize, c: i64) {
        let idx = self.idx(i, j);
        self.quad[idx] += c;
    }

    pub fn add_lin(&mut self, i: usize, c: i64) {
        self.lin[i] += c;
    }

    pub fn add_const(&mut self, c: i64) {
        self.constant += c;
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// Add `scale * (sum_i f_i k_i + fc) * (sum_j g_j k_j + gc)`.
    pub fn add_product(&mut self, f: &[i64], fc: i64, g: &[i64], gc: i64, scale: i64) {
        assert_eq!(f.len(), self.nvars);
        assert_eq!(g.len(), self.nvars);
        for i in 0..self.nvars {
            for j in 0..self.nvars {
                if f[i] != 0 && g[j] != 0 {
                    self.add_quad(i, j, scale * f[i] * g[j]);
                }
            }
        }
        for i in 0..self.nvars {
            self.add_lin(i, scale * (f[i] * gc + g[i] * fc));
        }
        self.add_const(scale * fc * gc);
    }

    pub fn eval(&self, k: &[i64]) -> i64 {
        assert_eq!(k.len(), self.nvars);
        let mut v = self.constant;
        for i in 0..self.nvars {
            if k[i] == 0 {
                continue;
            }
            v += self.lin[i] * k[i];
            v += self.quad[self.idx(i, i)] * k[i] * k[i];
            for j in i + 1..self.nvars {
                if k[j] != 0 {
                    v += self.quad[self.idx(i, j)] * k[i] * k[j];
                }
            }
        }
        v
    }

    /// Restrict the polynomial by pinning slots to zero or mapping them onto
    /// the variables of a smaller polynomial. Mapping two slots to the same
    /// variable identifies them.
    pub fn substitute(&self, slots: &[Slot], out_nvars: usize) -> KPoly {
        assert_eq!(slots.len(), self.nvars);
        let mut out = KPoly::zero(out_nvars);
        out.add_const(self.constant);
        for i in 0..self.nvars {
            let Slot::Var(vi) = slots[i] else { continue };
            out.add_lin(vi, self.lin[i]);
            for j in i..self.nvars {
                let Slot::Var(vj) = slots[j] else { continue };
                let c = self.quad[self.idx(i, j)];
                if c != 0 {
                    out.add_quad(vi, vj, c);
                }
            }
        }
        out
    }

    /// Verify the shape that makes enumeration terminate: all quadratic
    /// coefficients nonpositive, all linear coefficients strictly negative,
    /// constant nonpositive.
    pub fn check_enumerable(&self) -> Result<(), String> {
        for i in 0..self.nvars {
            for j in i..self.nvars {
                let c = self.quad[self.idx(i, j)];
                if c > 0 {
                    return Err(format!("positive quadratic coefficient {c} at ({i},{j})"));
                }
            }
        }
        for (i, &c) in self.lin.iter().enumerate() {
            if c >= 0 {
                return Err(format!("non-negative linear coefficient {c} at {i}"));
            }
        }
        if self.constant > 0 {
            return Err(format!("positive constant {}", self.constant));
        }
        Ok(())
    }

    /// Visit every lattice point `k >= mins` with `P(k) >= lowest`, passing
    /// the point and its value. Requires [`check_enumerable`] to hold; the
    /// monotone shape makes the pruning exact, so the enumeration is
    /// exhaustive.
    pub fn enumerate(&self, mins: &[i64], lowest: i64, visit: &mut dyn FnMut(&[i64], i64)) {
        assert_eq!(mins.len(), self.nvars);
        let mut k = mins.to_vec();
        self.enumerate_rec(0, &mut k, lowest, visit);
    }

    fn enumerate_rec(
        &self,
        depth: usize,
        k: &mut Vec<i64>,
        lowest: i64,
        visit: &mut dyn FnMut(&[i64], i64),
    ) {
        if depth == self.nvars {
            let v = self.eval(k);
            if v >= lowest {
                visit(k, v);
            }
            return;
        }
        let start = k[depth];
        loop {
            // With the remaining coordinates at their minima, the value can
            // only decrease as k[depth] grows; stop as soon as it dips below.
            if self.eval(k) < lowest {
                break;
            }
            self.enumerate_rec(depth + 1, k, lowest, visit);
            k[depth] += 1;
        }
        k[depth] = start;
    }

    /// Count the points with `P(k) = target` and `k >= mins`.
    pub fn count_at(&self, mins: &[i64], target: i64) -> u64 {
        let mut count = 0u64;
        self.enumerate(mins, target, &mut |_, v| {
            if v == target {
                count += 1;
            }
        });
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// -(4(k1k2+k1k3+k2k3) + 4(k1+k2+k3) + 3), the first rank-2 branch.
    fn branch_poly() -> KPoly {
        let mut p = KPoly::zero(3);
        for i in 0..3 {
            for j in i + 1..3 {
                p.add_quad(i, j, -4);
            }
            p.add_lin(i, -4);
        }
        p.add_const(-3);
        p
    }

    #[test]
    fn eval_matches_bruteforce() {
        let p = branch_poly();
        assert_eq!(p.eval(&[0, 0, 0]), -3);
        assert_eq!(p.eval(&[1, 0, 0]), -7);
        assert_eq!(p.eval(&[1, 1, 1]), -27);
    }

    #[test]
    fn enumerate_is_exhaustive() {
        let p = branch_poly();
        let mut seen = Vec::new();
        p.enumerate(&[0, 0, 0], -20, &mut |k, v| seen.push((k.to_vec(), v)));
        // Cross-check against a plain box scan.
        let mut expected = Vec::new();
        for a in 0..=10 {
            for b in 0..=10 {
                for c in 0..=10 {
                    let v = p.eval(&[a, b, c]);
                    if v >= -20 {
                        expected.push((vec![a, b, c], v));
                    }
                }
            }
        }
        seen.sort();
        expected.sort();
        assert_eq!(seen, expected);
    }

    #[test]
    fn substitution_identifies_variables() {
        let mut p = KPoly::zero(2);
        p.add_quad(0, 1, -2);
        p.add_lin(0, -1);
        p.add_lin(1, -3);
        let q = p.substitute(&[Slot::Var(0), Slot::Var(0)], 1);
        // -2t^2 - 4t
        assert_eq!(q.eval(&[5]), -70);
    }

    #[test]
    fn product_expansion() {
        let mut p = KPoly::zero(2);
        p.add_product(&[1, 0], 1, &[0, 1], 2, 6);
        // 6(k1+1)(k2+2) = 6k1k2 + 12k1 + 6k2 + 12
        assert_eq!(p.eval(&[1, 1]), 6 + 12 + 6 + 12);
    }
}
