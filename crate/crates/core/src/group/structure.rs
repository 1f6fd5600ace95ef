use std::fmt;

use serde::{Deserialize, Serialize};

use super::FiniteGroup;

/// Coarse structural fingerprint of a finite group: order, commutativity, and
/// the invariant factors of its abelianization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub order: usize,
    pub abelian: bool,
    /// Invariant factors `d_1 | d_2 | … ` of `G/[G,G]`, all greater than 1.
    pub abelian_invariants: Vec<u64>,
    pub name: String,
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn invariants_name(invariants: &[u64]) -> String {
    if invariants.is_empty() {
        "1".to_owned()
    } else {
        invariants.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("x")
    }
}

impl FiniteGroup {
    /// The commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> super::Subgroup {
        let n = self.order();
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated_by(&comms)
    }

    /// Invariant factors of this group, which must be abelian.
    fn abelian_invariant_factors(&self) -> Vec<u64> {
        debug_assert!(self.is_abelian());
        let n = self.order() as u64;
        // For each prime p, |{x : x^(p^k) = 1}| = p^(Σ_i min(k, e_i)).
        let mut prime_parts: Vec<(u64, Vec<u32>)> = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                while rest.is_multiple_of(p) {
                    rest /= p;
                }
                let mut exps: Vec<u32> = Vec::new();
                let mut prev_log = 0u32;
                let mut pk = 1u64;
                loop {
                    pk *= p;
                    let count =
                        (0..self.order()).filter(|&x| pk.is_multiple_of(self.element_order(x) as u64)).count() as u64;
                    let log = count.ilog(p);
                    let ge_k = log - prev_log;
                    if ge_k == 0 {
                        break;
                    }
                    exps.push(ge_k);
                    prev_log = log;
                }
                // exps[k-1] = number of factors with exponent ≥ k.
                let mut exponents = Vec::new();
                for k in 0..exps.len() {
                    let at_least = exps[k];
                    let more = exps.get(k + 1).copied().unwrap_or(0);
                    for _ in 0..(at_least - more) {
                        exponents.push(k as u32 + 1);
                    }
                }
                exponents.sort_unstable_by(|a, b| b.cmp(a));
                prime_parts.push((p, exponents));
            }
            p += 1;
        }
        let rank = prime_parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        // Largest invariant factor takes the largest power of each prime, and so on.
        let mut factors: Vec<u64> =
            (0..rank).map(|i| prime_parts.iter().map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k))).product()).collect();
        factors.reverse();
        factors
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        let abelian = self.is_abelian();
        let abelian_invariants = if abelian {
            self.abelian_invariant_factors()
        } else {
            let ab = self.quotient(&self.derived_subgroup()).expect("derived subgroup is normal");
            ab.abelian_invariant_factors()
        };
        let name = if abelian {
            invariants_name(&abelian_invariants)
        } else {
            format!("nonabelian({}; ab={})", self.order(), invariants_name(&abelian_invariants))
        };
        GroupDescriptor { order: self.order(), abelian, abelian_invariants, name }
    }
}
