//! Reading a surface document, reporting where it is wrong, and writing one
//! back out.

use ellsurf::evaluate;
use ellsurf::io_cli::{emit_surface, parse_surface};

fn main() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/documents/nodal_36_double.toml");
    let text = std::fs::read_to_string(path).unwrap();
    let s = parse_surface(&text).unwrap();
    let r = evaluate(&s).unwrap();
    println!("{} fibers, answers {:?}", s.config.fibers.len(), r.answers().map(|a| a.to_string()));
    println!("--- emitted ---\n{}", emit_surface(&s));

    for bad in [
        "[base]\ngenus = 0\n[[fibers]]\nkind = \"I7*\"\nmultiplicity = 3\n",
        "[base]\ngenus = 0\n[[fibers]]\nkind = \"I5\"\n",
        "[base]\ngenus = 0\ncolour = \"blue\"\n",
    ] {
        println!("error: {}", parse_surface(bad).unwrap_err());
    }
}
