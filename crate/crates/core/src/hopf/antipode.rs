//! The antipode, solved recursively from a counit identity.

use crate::error::Result;
use crate::steenrod::algebra::{cached, AntipodeRecursion};
use crate::steenrod::{DualSteenrod, Element, GenMonomial, TermAcc};

impl DualSteenrod {
    /// `c(τₙ)`.
    pub fn antipode_tau(&self, n: usize) -> Element {
        cached(&self.caches.antipode_gen, (false, n, 0), || {
            let mut acc = TermAcc::new();
            match self.config().antipode {
                // c(τₙ) = Σ_{i=0}^{n} c(ξ_{n-i})^{2^i} τᵢ
                AntipodeRecursion::LeftFactor => {
                    for i in 0..=n {
                        let c = self.antipode_xi_power(n - i, i as u32);
                        acc.add_element(&self.multiply(&c, &Element::tau(i)));
                    }
                }
                // c(τₙ) = τₙ + Σ_{i<n} ξ_{n-i}^{2^i} c(τᵢ)
                AntipodeRecursion::RightFactor => {
                    acc.add_element(&Element::tau(n));
                    for i in 0..n {
                        let x = Element::from_mono(GenMonomial::xi(n - i, 1 << i));
                        acc.add_element(&self.multiply(&x, &self.antipode_tau(i)));
                    }
                }
            }
            acc.into_element()
        })
    }

    /// `c(ξⱼ^{2^e})`, with `ξ₀ = 1`.
    pub fn antipode_xi_power(&self, j: usize, e: u32) -> Element {
        if j == 0 {
            return Element::one();
        }
        cached(&self.caches.antipode_gen, (true, j, e), || {
            if e > 0 {
                return self.square(&self.antipode_xi_power(j, e - 1));
            }
            let mut acc = TermAcc::new();
            match self.config().antipode {
                // c(ξₙ) = Σ_{i=1}^{n} c(ξ_{n-i})^{2^i} ξᵢ
                AntipodeRecursion::LeftFactor => {
                    for i in 1..=j {
                        let c = self.antipode_xi_power(j - i, i as u32);
                        acc.add_element(&self.multiply(&c, &Element::xi(i)));
                    }
                }
                // c(ξₙ) = Σ_{i<n} ξ_{n-i}^{2^i} c(ξᵢ)
                AntipodeRecursion::RightFactor => {
                    for i in 0..j {
                        let x = Element::from_mono(GenMonomial::xi(j - i, 1 << i));
                        acc.add_element(&self.multiply(&x, &self.antipode_xi_power(i, 0)));
                    }
                }
            }
            acc.into_element()
        })
    }

    pub fn antipode_monomial(&self, m: &GenMonomial) -> Element {
        let mut x = Element::one();
        for i in m.tau_indices() {
            x = self.multiply(&x, &self.antipode_tau(i));
        }
        for (j, n) in m.xi_exps() {
            for e in 0..16 {
                if (n >> e) & 1 == 1 {
                    x = self.multiply(&x, &self.antipode_xi_power(j, e));
                }
            }
        }
        x
    }

    /// The algebra map with `c(η_L h) = η_R h` extending the generator values.
    pub fn antipode(&self, x: &Element) -> Result<Element> {
        self.check_element(x)?;
        let mut acc = TermAcc::new();
        for t in x.terms() {
            let c = self.antipode_monomial(&t.mono);
            let h = self.eta_r_monomial(t.coeff);
            acc.add_element(&self.multiply(&h, &c));
        }
        Ok(acc.into_element())
    }
}
