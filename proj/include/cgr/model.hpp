#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgr/natural_order.hpp"

namespace cgr {

using ElementId = std::string;

// Pseudo-id standing for the whole graph in aggregate tables and closures.
// Never a legal element id.
inline const ElementId kGraphId = "GRAPH";

enum class ElementKind { Concept, Relation };

std::string to_string(ElementKind kind);

// Layout hints only; carries no semantic meaning and is ignored by
// fingerprints and diffs.
struct Presentation {
  double x = 0;
  double y = 0;
  std::optional<double> width;
  std::optional<double> height;
  std::optional<std::string> color;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// One argument slot of a relation. Positions are 1-based.
struct Arc {
  ElementId relation_id;
  int position = 1;
  ElementId concept_id;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Members and arcs of one nesting level. element_ids is kept in natural id
// order and arcs in (relation_id, position) order; use KnowledgeBase::
// add_element / add_arc to preserve this.
struct GraphBody {
  std::vector<ElementId> element_ids;
  std::vector<Arc> arcs;

  friend bool operator==(const GraphBody&, const GraphBody&) = default;
};

struct Element {
  ElementId id;
  ElementKind kind = ElementKind::Concept;
  std::string type_label;
  std::optional<std::string> referent;  // concepts only
  std::optional<GraphBody> nested;      // concepts only; present = this is a context
  std::optional<Presentation> presentation;

  bool is_context() const { return nested.has_value(); }

  friend bool operator==(const Element&, const Element&) = default;
};

// One immutable version of the knowledge base. All elements, nested or not,
// live in the flat `elements` map; bodies reference them by id.
struct KnowledgeBase {
  std::string version_label;
  GraphBody root;
  std::map<ElementId, Element, NaturalLess> elements;

  // Inserts into `elements` and into the parent body (root when `parent` is
  // empty), keeping body order canonical. Returns false if the id is already
  // present or the parent is not a known context.
  bool add_element(Element element, const std::optional<ElementId>& parent = {});

  // Places the arc in the body holding its relation. Returns false if the
  // relation is unknown.
  bool add_arc(const Arc& arc);

  const Element* find(const ElementId& id) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

enum class ViolationRule {
  EmptyId,
  ReservedId,
  DuplicateId,
  OrphanElement,
  DanglingElement,
  EmptyTypeLabel,
  ControlChar,
  RelationReferent,
  RelationNested,
  BadPresentation,
  DanglingArc,
  ArcEndpointKind,
  BadArcPosition,
  DuplicateArcSlot,
  CrossContextArc,
};

std::string to_string(ViolationRule rule);

struct Violation {
  ViolationRule rule;
  ElementId id;  // offending element id, or relation id for arc rules
  std::string detail;
};

// "dangling-arc(cn99): arc target does not exist"
std::string format_violation(const Violation& violation);

// Empty result iff every type invariant holds. Violations are data, not
// failures; other operations assume a kb that validates cleanly.
std::vector<Violation> validate(const KnowledgeBase& kb);

// "Person", "Person : John", "think". Throws std::invalid_argument on an
// unknown id.
std::string describe(const KnowledgeBase& kb, const ElementId& id);

// "[contain -> Lake] : 1". Throws std::invalid_argument if an endpoint is
// unknown.
std::string describe_link(const KnowledgeBase& kb, const Arc& arc);

// Id of the enclosing context, or kGraphId for root-level elements.
// Throws std::invalid_argument on an unknown id.
ElementId parent_context(const KnowledgeBase& kb, const ElementId& id);

// Every element id mapped to its enclosing context id (kGraphId for root).
std::map<ElementId, ElementId, NaturalLess> parent_index(const KnowledgeBase& kb);

// All element ids transitively inside the context `id` (excluding `id`
// itself), in natural order. kGraphId yields every element. Throws
// std::invalid_argument if `id` is not a context.
std::vector<ElementId> containment_closure(const KnowledgeBase& kb, const ElementId& id);

}  // namespace cgr
