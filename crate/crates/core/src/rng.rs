use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// ChaCha stream keyed by `(seed, domain)`; `stream` selects an
/// independent sequence under that key.
pub(crate) fn keyed_rng(seed: u64, domain: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ domain);
    rng.set_stream(stream);
    rng
}
