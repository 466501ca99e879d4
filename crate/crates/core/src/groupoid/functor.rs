use super::presentation::{free_reduce, inverse_word, GroupoidPresentation, Letter, Word};
use crate::error::{Error, Result};

/// A functor between presented groupoids: objects to objects, generating
/// isos to paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidFunctor {
    pub object_map: Vec<usize>,
    pub gen_map: Vec<Word>,
}

impl GroupoidFunctor {
    /// Checks that endpoints are preserved.
    pub fn new(
        source: &GroupoidPresentation,
        target: &GroupoidPresentation,
        object_map: Vec<usize>,
        gen_map: Vec<Word>,
    ) -> Result<Self> {
        if object_map.len() != source.objects().len() || gen_map.len() != source.gens().len() {
            return Err(Error::InvalidGroupoid("functor data has the wrong shape".into()));
        }
        if object_map.iter().any(|&o| o >= target.objects().len()) {
            return Err(Error::InvalidGroupoid("functor maps to an unknown object".into()));
        }
        for (g, w) in source.gens().iter().zip(&gen_map) {
            let end = target.word_target(object_map[g.source], w)?;
            if end != object_map[g.target] {
                return Err(Error::InvalidGroupoid(format!("image of {} has wrong endpoints", g.name)));
            }
        }
        Ok(GroupoidFunctor { object_map, gen_map })
    }

    /// Object map only; valid for discrete sources.
    pub fn on_objects(object_map: Vec<usize>) -> Self {
        GroupoidFunctor { object_map, gen_map: Vec::new() }
    }

    pub fn identity(g: &GroupoidPresentation) -> Self {
        GroupoidFunctor {
            object_map: (0..g.objects().len()).collect(),
            gen_map: (0..g.gens().len()).map(|i| vec![Letter::new(i)]).collect(),
        }
    }

    pub fn map_word(&self, w: &[Letter]) -> Word {
        let mut out = Vec::new();
        for l in w {
            let img = &self.gen_map[l.gen];
            if l.inverse {
                out.extend(inverse_word(img));
            } else {
                out.extend_from_slice(img);
            }
        }
        free_reduce(&out)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupoidFunctor) -> GroupoidFunctor {
        GroupoidFunctor {
            object_map: self.object_map.iter().map(|&o| other.object_map[o]).collect(),
            gen_map: self.gen_map.iter().map(|w| other.map_word(w)).collect(),
        }
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.object_map.iter().all(|o| seen.insert(*o))
    }

    /// Equal object maps and freely equal generator images.
    pub fn agrees_with(&self, other: &GroupoidFunctor) -> bool {
        self.object_map == other.object_map
            && self.gen_map.len() == other.gen_map.len()
            && self
                .gen_map
                .iter()
                .zip(&other.gen_map)
                .all(|(a, b)| free_reduce(a) == free_reduce(b))
    }
}

/// Makes `f` injective on objects by duplicating collided target objects.
///
/// For target object `y` hit by `x₀ < x₁ < …`, `x₀` keeps `y` and `x_k`
/// moves to a new object `y#k` joined to `y` by a connecting iso
/// `alpha[y#k]`. Generators are conjugated by the connecting isos of their
/// endpoints, so the new functor is isomorphic to `f`.
pub fn stretch(
    source: &GroupoidPresentation,
    target: &GroupoidPresentation,
    f: &GroupoidFunctor,
) -> Result<(GroupoidFunctor, GroupoidPresentation)> {
    let mut stretched = target.clone();
    let mut count = vec![0usize; target.objects().len()];
    let mut object_map = Vec::with_capacity(f.object_map.len());
    // path from the original image to the new image, per source object
    let mut connector: Vec<Word> = Vec::with_capacity(f.object_map.len());
    for &y in &f.object_map {
        let k = count[y];
        count[y] += 1;
        if k == 0 {
            object_map.push(y);
            connector.push(Vec::new());
            continue;
        }
        let label = format!("{}#{}", target.objects()[y], k);
        let o = stretched.add_object(label.clone())?;
        let a = stretched.add_gen(format!("alpha[{label}]"), y, o)?;
        object_map.push(o);
        connector.push(vec![Letter::new(a)]);
    }
    let gen_map = source
        .gens()
        .iter()
        .zip(&f.gen_map)
        .map(|(g, w)| {
            let mut out = inverse_word(&connector[g.source]);
            out.extend_from_slice(w);
            out.extend_from_slice(&connector[g.target]);
            free_reduce(&out)
        })
        .collect();
    let functor = GroupoidFunctor::new(source, &stretched, object_map, gen_map)?;
    Ok((functor, stretched))
}
