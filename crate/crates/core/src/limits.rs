/// Size bounds guarding the exponential constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Arrows of a category handed to Ω.
    pub max_arrows: usize,
    /// Elements of a quantale whose filters are enumerated, and opens produced by Ω.
    pub max_elements: usize,
    /// Arrows of a category whose covering functors are enumerated.
    pub hom_arrows: usize,
    /// Elements of a quantale whose morphisms are enumerated.
    pub hom_elements: usize,
    /// Members of any single enumerated hom-set.
    pub hom_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_arrows: 512,
            max_elements: 1024,
            hom_arrows: 12,
            hom_elements: 64,
            hom_size: 100_000,
        }
    }
}
