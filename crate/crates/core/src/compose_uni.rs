//! Composed sums and products of univariate polynomials,
//! f ⊙ g = ∏_α ∏_β (x − α ⋄ β), and their decomposition over prime fields.

use crate::error::{Error, Result};
use crate::fields::finite::smallest_irreducible;
use crate::fields::{build_extension, Fe, Field, FieldConfig};
use crate::ring::norm_mod_monic;
use crate::unipoly::UniPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiamondKind {
    Addition,
    Multiplication,
}

impl DiamondKind {
    /// α ⋄ β.
    pub fn apply(self, a: &Fe, b: &Fe) -> Fe {
        match self {
            DiamondKind::Addition => a + b,
            DiamondKind::Multiplication => a * b,
        }
    }

    pub fn identity(self, field: &Field) -> Fe {
        match self {
            DiamondKind::Addition => field.zero(),
            DiamondKind::Multiplication => field.one(),
        }
    }
}

fn check_inputs(f: &UniPoly, g: &UniPoly) -> Result<()> {
    if f.field() != g.field() {
        return Err(Error::BadFieldMismatch(format!("{:?} vs {:?}", f.field(), g.field())));
    }
    for p in [f, g] {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::Invalid(format!("{p} is constant")));
        }
        if !p.is_monic() {
            return Err(Error::NotMonic(p.var()));
        }
    }
    Ok(())
}

/// ∏∏ (x − (α + β)) = Res_z(f(z), g(x − z)).
pub fn composed_sum_uni(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    check_inputs(f, g)?;
    let field = f.field();
    let modulus: Vec<UniPoly> = f.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let n = g.degree().unwrap();
    let mut gz = vec![UniPoly::zero(field); n + 1];
    for (j, b) in g.coeffs().iter().enumerate() {
        // b (x − z)^j = b Σ_k C(j,k) x^{j−k} (−z)^k
        let mut binom: i128 = 1;
        for k in 0..=j {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = b * &field.from_i64((sign * binom) as i64);
            gz[k] = &gz[k] + &UniPoly::monomial(c, j - k);
            binom = binom * (j - k) as i128 / (k + 1) as i128;
        }
    }
    Ok(norm_mod_monic(&modulus, &gz).with_var('x'))
}

/// ∏∏ (x − αβ) = Res_z(f(z), z^{deg g} g(x/z)).
pub fn composed_mul_uni(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    check_inputs(f, g)?;
    if f.coeff(0).is_zero() || g.coeff(0).is_zero() {
        return Err(Error::ZeroRoot);
    }
    let field = f.field();
    let modulus: Vec<UniPoly> = f.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let n = g.degree().unwrap();
    let mut gz = vec![UniPoly::zero(field); n + 1];
    for (j, b) in g.coeffs().iter().enumerate() {
        gz[n - j] = UniPoly::monomial(b.clone(), j);
    }
    Ok(norm_mod_monic(&modulus, &gz).with_var('x'))
}

pub fn composed_uni(f: &UniPoly, g: &UniPoly, kind: DiamondKind) -> Result<UniPoly> {
    match kind {
        DiamondKind::Addition => composed_sum_uni(f, g),
        DiamondKind::Multiplication => composed_mul_uni(f, g),
    }
}

/// (x − c) ⊙ f: f(x − c) for addition, c^{deg f} f(x/c) for multiplication.
pub fn associate(f: &UniPoly, c: &Fe, kind: DiamondKind) -> Result<UniPoly> {
    match kind {
        DiamondKind::Addition => {
            let shift = UniPoly::new(f.field(), vec![-c, f.field().one()]);
            Ok(f.compose(&shift).with_var(f.var()))
        }
        DiamondKind::Multiplication => {
            let inv = c.checked_inv().ok_or(Error::ZeroElement)?;
            let d = f.degree().unwrap_or(0) as u128;
            Ok(f.scale_arg(&inv).scale(&c.pow(d)))
        }
    }
}

/// Every unit c of the prime field with g = (x − c) ⊙ f.
pub fn associate_units(f: &UniPoly, g: &UniPoly, kind: DiamondKind) -> Result<Vec<Fe>> {
    let field = f.field();
    let elems = field.elements().ok_or(Error::NotFiniteField)?;
    let mut out = Vec::new();
    for c in elems {
        if kind == DiamondKind::Multiplication && c.is_zero() {
            continue;
        }
        if &associate(f, &c, kind)? == g {
            out.push(c);
        }
    }
    Ok(out)
}

/// The pieces of the irreducibility criterion for f ⊙ g.
#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibilityReport {
    pub product: UniPoly,
    pub product_irreducible: bool,
    pub f_irreducible: bool,
    pub g_irreducible: bool,
    pub degrees_coprime: bool,
    /// product irreducible ⇔ (f, g irreducible and degrees coprime)
    pub holds: bool,
}

pub fn check_irreducibility_criterion(f: &UniPoly, g: &UniPoly, kind: DiamondKind) -> Result<IrreducibilityReport> {
    let product = composed_uni(f, g, kind)?;
    let product_irreducible = product.is_irreducible()?;
    let f_irreducible = f.is_irreducible()?;
    let g_irreducible = g.is_irreducible()?;
    let degrees_coprime = num_integer::gcd(f.degree().unwrap(), g.degree().unwrap()) == 1;
    let holds = product_irreducible == (f_irreducible && g_irreducible && degrees_coprime);
    Ok(IrreducibilityReport {
        product,
        product_irreducible,
        f_irreducible,
        g_irreducible,
        degrees_coprime,
        holds,
    })
}

/// Another decomposition of the same polynomial and how it relates to the
/// primary one: `factors[permutation[i]] = (x − units[i]) ⊙ primary[i]`,
/// with the units combining to the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct AlternateDecomposition {
    pub factors: Vec<UniPoly>,
    pub permutation: Vec<usize>,
    pub units: Vec<Fe>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionResult {
    pub kind: DiamondKind,
    /// Indecomposable components, by increasing degree.
    pub factors: Vec<UniPoly>,
    pub alternates: Vec<AlternateDecomposition>,
}

#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    /// Maximum number of candidate components examined overall.
    pub budget: u64,
    /// Maximum number of alternate decompositions reported.
    pub max_alternates: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            budget: 1_000_000,
            max_alternates: 8,
        }
    }
}

struct Search<'a> {
    kind: DiamondKind,
    base: &'a Field,
    big: Field,
    spent: u64,
    budget: u64,
}

impl Search<'_> {
    fn charge(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Minimal polynomial over F_p of an element of the big field, mapped
    /// back to the base field.
    fn minpoly(&self, c: &Fe) -> UniPoly {
        let p = self.base.characteristic() as u128;
        let mut orbit = vec![c.clone()];
        loop {
            let next = orbit.last().unwrap().pow(p);
            if &next == c {
                break;
            }
            orbit.push(next);
        }
        let prod = orbit
            .iter()
            .fold(UniPoly::one(&self.big), |acc, r| &acc * &UniPoly::linear_root(r));
        let coeffs = prod
            .coeffs()
            .iter()
            .map(|a| self.base.from_i64(a.as_prime_residue().expect("Frobenius-stable") as i64))
            .collect();
        UniPoly::new(self.base, coeffs)
    }

    /// Decompositions f = g ⊙ h with deg g = d, one per distinct g (in
    /// coefficient-lexicographic order of g), up to `limit` of them.
    ///
    /// With a a root of f in F_{p^n} and e = n/d coprime to d, such a split
    /// is a = b ⋄ c with b ∈ F_{p^d} and c ∈ F_{p^e}; g and h are the
    /// minimal polynomials of b and c. So it suffices to run b over F_{p^d}.
    fn splits(&mut self, f: &UniPoly, d: usize, limit: usize) -> Result<Vec<(UniPoly, UniPoly)>> {
        let n = f.degree().unwrap();
        let e = n / d;
        let p = self.base.characteristic();
        let f_big = f.embed_into(&self.big)?;
        let a = f_big.roots_in_field()?.into_iter().next().expect("irreducible f splits in F_{p^n}").0;
        // β generating F_{p^d} inside the big field
        let sub = smallest_irreducible(p, d as u32)?;
        let sub_poly = UniPoly::new(&self.big, sub.iter().map(|&c| self.big.from_i64(c as i64)).collect());
        let beta = sub_poly.roots_in_field()?.into_iter().next().expect("F_{p^d} ⊂ F_{p^n}").0;
        let powers: Vec<Fe> = (0..d).map(|i| beta.pow(i as u128)).collect();
        let qe = (p as u128).pow(e as u32);

        let mut found: Vec<(UniPoly, UniPoly)> = Vec::new();
        let total = (p as u128).pow(d as u32);
        for idx in 1..total {
            self.charge()?;
            let mut k = idx;
            let mut b = self.big.zero();
            for pw in &powers {
                b = &b + &(pw * &self.big.from_i64((k % p as u128) as i64));
                k /= p as u128;
            }
            let c = match self.kind {
                DiamondKind::Addition => &a - &b,
                DiamondKind::Multiplication => &a * &b.inv(),
            };
            if c.pow(qe) != c {
                continue;
            }
            let g = self.minpoly(&b);
            if found.iter().any(|(g2, _)| *g2 == g) {
                continue;
            }
            let h = self.minpoly(&c).with_var(f.var());
            debug_assert!(composed_uni(&g, &h, self.kind)? == *f);
            found.push((g.with_var(f.var()), h));
        }
        found.sort_by(|x, y| x.0.coeffs().cmp(y.0.coeffs()));
        found.truncate(limit);
        Ok(found)
    }

    /// Full decomposition: split off the smallest coprime cofactor degree
    /// that works, then recurse on the rest.
    fn decompose(&mut self, f: &UniPoly) -> Result<Vec<UniPoly>> {
        let n = f.degree().unwrap();
        for d in coprime_split_degrees(n) {
            if let Some((g, h)) = self.splits(f, d, 1)?.pop() {
                let mut out = vec![g];
                out.extend(self.decompose(&h)?);
                return Ok(out);
            }
        }
        Ok(vec![f.clone()])
    }
}

/// Degrees 1 < d < n with gcd(d, n/d) = 1, increasing.
fn coprime_split_degrees(n: usize) -> Vec<usize> {
    (2..n).filter(|d| n % d == 0 && num_integer::gcd(*d, n / d) == 1).collect()
}

/// Decompose an irreducible polynomial over a prime field into
/// indecomposable composed factors, with alternates and unit certificates.
pub fn decompose_uni(f: &UniPoly, kind: DiamondKind) -> Result<DecompositionResult> {
    decompose_uni_with(f, kind, DecomposeOptions::default())
}

pub fn decompose_uni_with(f: &UniPoly, kind: DiamondKind, opts: DecomposeOptions) -> Result<DecompositionResult> {
    let field = f.field();
    let p = match field.config() {
        FieldConfig::Finite { p, e: 1, .. } => *p,
        FieldConfig::Finite { .. } => {
            return Err(Error::Invalid("decomposition is implemented over prime fields only".into()))
        }
        _ => return Err(Error::NotFiniteField),
    };
    let n = f.degree().unwrap_or(0);
    if n < 2 || !f.is_monic() {
        return Err(Error::Invalid(format!("{f} must be monic of degree > 1")));
    }
    if kind == DiamondKind::Multiplication && f.coeff(0).is_zero() {
        return Err(Error::ZeroRoot);
    }
    if !f.is_irreducible()? {
        return Err(Error::Invalid(format!("{f} is not irreducible")));
    }
    let big = Field::new(build_extension(p, n as u32)?)?;
    let mut search = Search {
        kind,
        base: field,
        big,
        spent: 0,
        budget: opts.budget,
    };
    let mut factors = search.decompose(f)?;
    factors.sort();

    let mut alternates = Vec::new();
    if factors.len() > 1 && opts.max_alternates > 0 {
        let d = factors[0].degree().unwrap();
        let candidates = search.splits(f, d, opts.max_alternates + 1)?;
        for (g, h) in candidates {
            if alternates.len() >= opts.max_alternates {
                break;
            }
            let mut alt = vec![g];
            alt.extend(search.decompose(&h)?);
            alt.sort();
            if alt == factors {
                continue;
            }
            if let Some(cert) = certificate(&factors, &alt, kind)? {
                alternates.push(cert);
            }
        }
    }
    Ok(DecompositionResult {
        kind,
        factors,
        alternates,
    })
}

/// Match `alt` to `primary` by degree and find units combining to the
/// identity.
fn certificate(primary: &[UniPoly], alt: &[UniPoly], kind: DiamondKind) -> Result<Option<AlternateDecomposition>> {
    let mut permutation = Vec::with_capacity(primary.len());
    for f in primary {
        match alt.iter().position(|g| g.degree() == f.degree()) {
            Some(i) => permutation.push(i),
            None => return Ok(None),
        }
    }
    let options: Vec<Vec<Fe>> = primary
        .iter()
        .zip(&permutation)
        .map(|(f, &i)| associate_units(f, &alt[i], kind))
        .collect::<Result<_>>()?;
    let field = primary[0].field();
    let identity = kind.identity(field);
    // depth-first over the unit choices for one whose ⋄-combination is the identity
    fn pick(options: &[Vec<Fe>], acc: Fe, chosen: &mut Vec<Fe>, kind: DiamondKind, identity: &Fe) -> bool {
        if chosen.len() == options.len() {
            return &acc == identity;
        }
        for c in &options[chosen.len()] {
            chosen.push(c.clone());
            if pick(options, kind.apply(&acc, c), chosen, kind, identity) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if pick(&options, identity.clone(), &mut chosen, kind, &identity) {
        Ok(Some(AlternateDecomposition {
            factors: alt.to_vec(),
            permutation,
            units: chosen,
        }))
    } else {
        Ok(None)
    }
}
