use std::collections::{BTreeMap, HashMap};

use super::VirtualCharacter;
use crate::exec::Exec;
use crate::rootdata::Weight;
use crate::Mult;

const CHUNK: usize = 16;

/// `Σ_{(λ,m)} Σ_{(μ,c)} m·c·χ(λ + jμ)` expanded by alternating dominant
/// reflection of `λ + jμ + ρ`. With `j = 1` this is the Brauer-Klimyk
/// tensor product of `left` with the character whose weights are `formal`;
/// with `left` trivial it is the Adams operation `ψ^j`.
pub fn brauer_product(left: &VirtualCharacter, formal: &[(Weight, Mult)], j: i32, exec: Exec) -> VirtualCharacter {
    let system = left.system();
    let terms: Vec<(&Weight, Mult)> = left.terms().collect();
    let rank = system.rank();
    let run = |chunk: &[(&Weight, Mult)]| -> HashMap<Weight, Mult> {
        let mut acc: HashMap<Weight, Mult> = HashMap::new();
        let mut buf = vec![0i32; rank];
        for (lambda, m) in chunk {
            for (mu, c) in formal {
                for i in 0..rank {
                    buf[i] = lambda[i] + j * mu[i] + 1;
                }
                let sign = system.reflect_in_place(&mut buf);
                if sign == 0 {
                    continue;
                }
                for x in buf.iter_mut() {
                    *x -= 1;
                }
                let v = sign as Mult * m * c;
                match acc.get_mut(&buf[..]) {
                    Some(e) => *e += v,
                    None => {
                        acc.insert(buf.clone(), v);
                    }
                }
            }
        }
        acc
    };
    let merge = |a: HashMap<Weight, Mult>, b: HashMap<Weight, Mult>| if a.len() >= b.len() { merge_into(a, b) } else { merge_into(b, a) };
    let total = exec.map_chunks_reduce(&terms, CHUNK, run, merge).unwrap_or_default();
    let map: BTreeMap<Weight, Mult> = total.into_iter().filter(|(_, m)| *m != 0).collect();
    VirtualCharacter::from_map(system, map)
}

fn merge_into(mut a: HashMap<Weight, Mult>, b: HashMap<Weight, Mult>) -> HashMap<Weight, Mult> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}
