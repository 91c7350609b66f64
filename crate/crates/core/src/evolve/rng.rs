use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Independent stream keyed by `(seed, generation, parent, offspring)`.
///
/// The four coordinates form the 256-bit ChaCha key directly, so distinct
/// coordinates never share a stream. Generation 0 is reserved for seeding
/// the initial population.
pub fn stream(seed: u64, generation: u64, parent: u64, offspring: u64) -> StreamRng {
    let mut key = [0u8; 32];
    for (i, x) in [seed, generation, parent, offspring]
        .into_iter()
        .enumerate()
    {
        key[i * 8..(i + 1) * 8].copy_from_slice(&x.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}
