//! Writes the Schottky-type example groups as group files.
//!
//! `cargo run -p hypquat-core --example example_groups -- DIR`

use std::path::PathBuf;

use hypquat::groups::examples::{fuchsian_amalgam, fuchsian_hnn};
use hypquat::groups::io::write_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("schottky_amalgam.group"), write_group(&fuchsian_amalgam(0.5)?))?;
    std::fs::write(dir.join("schottky_hnn.group"), write_group(&fuchsian_hnn(0.5)?))?;
    Ok(())
}
