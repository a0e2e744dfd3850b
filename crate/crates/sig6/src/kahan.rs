//! Compensated (Kahan) summation.
//!
//! The hypergeometric series and the quadrature engines both accumulate
//! many small terms into a running sum; compensated summation keeps the
//! rounding error of the accumulation itself near one ulp instead of
//! growing with the term count.

/// Kahan–Babuska compensated accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Starts the accumulator at `value` with zero compensation.
    pub(crate) fn with_initial(value: f64) -> Self {
        Self {
            sum: value,
            comp: 0.0,
        }
    }

    /// Adds `term` using Neumaier's variant, which stays accurate even
    /// when the incoming term is larger than the running sum.
    pub(crate) fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated value of the sum.
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
