// Sample W-random graphs from each graphon family and round-trip them
// through both file formats.

use graphon::io::{read_binary, read_edge_list, spec_from_toml, write_binary, write_edge_list};
use graphon::model::{sample_graph, sample_latents, sparsify, GraphonSpec, KernelId};

pub fn run() -> graphon::Result<()> {
    let specs = [
        spec_from_toml("[graphon]\nfamily = \"erdos_renyi\"\np = 0.3\n")?,
        GraphonSpec::Sbm {
            weights: vec![0.5, 0.5],
            block_probs: vec![vec![0.9, 0.1], vec![0.1, 0.9]],
        },
        GraphonSpec::GeometricGraph { d: 2, delta: 0.2 },
        GraphonSpec::HolderCube {
            d: 1,
            kernel: KernelId::Affine,
            alpha: 1.0,
        },
    ];
    for spec in &specs {
        let lat = sample_latents(spec, 300, 7)?;
        let a = sample_graph(spec, &lat, 7)?;
        let density = 2.0 * a.num_edges() as f64 / (300.0 * 299.0);
        println!("{spec:?}\n  edges={} density={density:.3}", a.num_edges());

        let mut text = Vec::new();
        write_edge_list(&mut text, &a)?;
        let mut bin = Vec::new();
        write_binary(&mut bin, &a)?;
        assert_eq!(read_edge_list(&text[..])?, a);
        assert_eq!(read_binary(&bin[..])?, a);
        println!("  edge list {} bytes, binary {} bytes", text.len(), bin.len());
    }

    let lat = sample_latents(&specs[1], 300, 1)?;
    let thin = sparsify(&sample_graph(&specs[1], &lat, 1)?, 0.25, 1)?;
    println!("sparsified: rho={} edges={}", thin.rho(), thin.num_edges());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
