//! Emits and reloads the JSON file formats: category data, triangulations,
//! and surgery presentations.
//!
//!     cargo run --release --example file_formats

use std::collections::BTreeSet;

use quantum3::builtins;
use quantum3::io::{
    load_category, load_presentation, load_triangulation, save_category, save_triangulation,
    CategoryFile, PresentationFile,
};
use quantum3::surgery::{unknot_presentation, wrt};
use quantum3::triangulation::builders::lens;
use quantum3::Tolerance;

fn main() {
    let dir = std::env::temp_dir().join("quantum3-file-formats");
    std::fs::create_dir_all(&dir).unwrap();

    // category file
    let fib = builtins::fibonacci();
    let cat_path = dir.join("fibonacci.json");
    save_category(&cat_path, &CategoryFile::from_modular(&fib)).unwrap();
    let loaded = load_category(&cat_path).unwrap();
    println!(
        "category file {}: rank {}, {} sixj entries, modular data {}",
        cat_path.display(),
        loaded.spherical().rank(),
        loaded.spherical().sixj_table().len(),
        loaded.modular().is_some()
    );

    // triangulation file
    let tri_path = dir.join("lens3.json");
    save_triangulation(&tri_path, &lens(3)).unwrap();
    let tri = load_triangulation(&tri_path).unwrap();
    println!(
        "triangulation file {}: {} tets, {} edge classes, euler {}",
        tri_path.display(),
        tri.n_tets(),
        tri.n_edge_classes(),
        tri.euler_characteristic()
    );

    // presentation file (diagram + surgery_components)
    let pres = unknot_presentation(3);
    let pres_path = dir.join("lens3_surgery.json");
    std::fs::write(
        &pres_path,
        serde_json::to_string_pretty(&PresentationFile::from_presentation(&pres)).unwrap(),
    )
    .unwrap();
    let back = load_presentation(&pres_path).unwrap();
    assert_eq!(back.surgery, BTreeSet::from([0]));
    let tol = Tolerance::default();
    let m = loaded.modular().unwrap();
    let v = wrt(m, &back, &tol, 1).unwrap();
    println!(
        "presentation file {}: WRT over fibonacci = {:.9} {:+.9}i",
        pres_path.display(),
        v.re,
        v.im
    );
}
