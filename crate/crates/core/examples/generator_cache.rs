//! Writes the generator set to the text cache, reads it back and compares.

use wbasis::cli::GeneratorCacheFile;
use wbasis::walgebra::choose_generators;

fn main() -> Result<(), wbasis::Error> {
    let gens = choose_generators(2)?;
    let file = GeneratorCacheFile::from_set(&gens);
    let text = file.to_text();
    print!("{text}");
    let back = GeneratorCacheFile::parse(&text)?;
    assert_eq!(back.to_set(), gens);
    assert_eq!(back.to_text(), text);
    println!("round trip ok, checksum {}", back.checksum());
    let broken = text.replacen("term", "term ", 1);
    println!("tampered copy: {}", GeneratorCacheFile::parse(&broken).unwrap_err());
    Ok(())
}
