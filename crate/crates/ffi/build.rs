// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let crate_dir = PathBuf::from(std::env::var("CARGO_MANIFEST_DIR").unwrap());
    let config = cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")).expect("read cbindgen.toml");
    let header =
        cbindgen::Builder::new().with_crate(&crate_dir).with_config(config).generate().expect("generate C header");
    let path = crate_dir.join("include").join("rosettes.h");
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    header.write_to_file(path);
}
