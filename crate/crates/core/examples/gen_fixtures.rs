//! Regenerates `fixtures/` from `starlattice::fixtures::all`.

use std::path::PathBuf;

fn main() -> starlattice::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    starlattice::fixtures::write_all(&dir)?;
    for f in starlattice::fixtures::all() {
        println!("{}", dir.join(f.name).display());
    }
    Ok(())
}
