use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{family, FamilyId};
use crate::error::{Error, Result};
use crate::scalar::{ParamBinding, Rational};

/// Numerators are drawn from `-NUM..=NUM`, denominators from `1..=DEN`:
/// small enough that the equality cases of the stated conditions are hit regularly.
const NUM: i64 = 4;
const DEN: i64 = 3;
const ATTEMPTS_PER_SAMPLE: usize = 1000;

/// Independent, reproducible random stream for one (family, n, seed).
pub fn rng_for(id: FamilyId, n: usize, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stream = id
        .tag()
        .bytes()
        .chain((n as u64).to_le_bytes())
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    rng.set_stream(stream);
    rng
}

/// `count` random bindings satisfying the family's constraints and `accept`.
pub fn random_bindings(
    id: FamilyId,
    n: usize,
    count: usize,
    seed: u64,
    accept: impl Fn(&ParamBinding) -> bool,
) -> Result<Vec<ParamBinding>> {
    let rep = family(id, n)?;
    let params = rep.params();
    let mut rng = rng_for(id, n, seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > count.max(1) * ATTEMPTS_PER_SAMPLE {
            return Err(Error::GuardExceeded(attempts as u128, (count * ATTEMPTS_PER_SAMPLE) as u128));
        }
        let mut b = ParamBinding::new();
        for p in &params {
            let num = rng.gen_range(-NUM..=NUM);
            let den = rng.gen_range(1..=DEN);
            b.set(*p, Rational::new(num, den)?);
        }
        if accept(&b) && rep.specialize(&b).is_ok() {
            out.push(b);
        }
    }
    Ok(out)
}
