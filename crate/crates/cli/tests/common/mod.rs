#![allow(dead_code)]

//! Shared fixtures for the CLI and acceptance suites.

pub mod oracle;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ccuc::ingest::GrayFrame;
use image::GrayImage;

pub fn ccuc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ccuc"))
}

pub fn run(args: &[&str]) -> Output {
    ccuc().args(args).output().expect("spawn ccuc")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Writes 8-bit frames as `frame_000.png`, `frame_001.png`, ... under `dir`.
pub fn write_png_dir(dir: &Path, frames: &[GrayFrame]) -> PathBuf {
    std::fs::create_dir_all(dir).unwrap();
    for (i, f) in frames.iter().enumerate() {
        assert_eq!(f.levels(), 256);
        let img = GrayImage::from_raw(
            f.width() as u32,
            f.height() as u32,
            f.pixels().iter().map(|&v| v as u8).collect(),
        )
        .unwrap();
        img.save(dir.join(format!("frame_{i:03}.png"))).unwrap();
    }
    dir.to_path_buf()
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}
