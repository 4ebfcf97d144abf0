#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdesc/blowup.hpp"
#include "cdesc/complex.hpp"
#include "cdesc/descent.hpp"
#include "cdesc/error.hpp"
#include "cdesc/gysin.hpp"
#include "cdesc/motive.hpp"
#include "cdesc/scissor.hpp"
#include "cdesc/snc.hpp"

namespace cdesc {

struct FixtureIssue {
    std::string location;  ///< JSON pointer of the offending entry
    std::string invariant;
    std::string message;
};

/// Validation failed; every issue found is listed.
class FixtureError : public Error {
public:
    explicit FixtureError(std::vector<FixtureIssue> issues);
    const std::vector<FixtureIssue>& issues() const noexcept { return issues_; }
    bool names(std::string_view invariant) const;

private:
    std::vector<FixtureIssue> issues_;
};

struct NamedMap {
    std::string source;
    std::string target;
    ChainMap map;
};

struct DiagramSpec {
    std::map<CubeIndex, std::string> vertices;
    std::map<EdgeKey, std::string> edges;
    CubicalDiagram diagram;
};

struct PairSpec {
    SNCPair pair;
    std::optional<std::string> open_part;
};

struct MorphismSpec {
    std::string source;
    std::string target;
    PairMorphism morphism;
};

struct CompositionSpec {
    std::string composite;
    std::string f;
    std::string g;
};

struct SquareSpec {
    std::string blowup;
    RealizedSquare square;
    bool negative_control = false;
};

struct ClassSquareSpec {
    ClassSquare square;
    bool negative_control = false;
};

struct IndependenceSpec {
    std::string a;
    std::string b;
    std::string open_part;
    bool negative_control = false;
};

/// One self-contained document: atoms, relations, complexes, diagrams,
/// varieties, pairs, morphisms and squares.
struct Fixture {
    AtomRegistry atoms;
    RelationSet relations;
    std::map<std::string, QComplex> complexes;
    std::map<std::string, NamedMap> maps;
    std::map<std::string, DiagramSpec> diagrams;
    VarietyCatalog varieties;
    std::map<std::string, PairSpec> pairs;
    std::map<std::string, MorphismSpec> morphisms;
    std::map<std::string, CompositionSpec> compositions;
    std::map<std::string, BlowupSquare> blowups;
    std::map<std::string, SquareSpec> squares;
    std::map<std::string, ClassSquareSpec> class_squares;
    std::map<std::string, IndependenceSpec> independence;

    const PairSpec& pair(const std::string& name) const;
    const MorphismSpec& morphism(const std::string& name) const;
    const SquareSpec& square(const std::string& name) const;
};

/// Throws ParseError for malformed documents and FixtureError for
/// documents that violate an invariant or hold a dangling reference.
Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::string& path);

/// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string dump_fixture(const Fixture& fixture);

}  // namespace cdesc
