#include "cgr/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgr {

namespace {

bool arc_slot_less(const Arc& a, const Arc& b) {
  if (int c = natural_compare(a.relation_id, b.relation_id); c != 0) return c < 0;
  return a.position < b.position;
}

void insert_sorted_id(std::vector<ElementId>& ids, const ElementId& id) {
  auto pos = std::lower_bound(ids.begin(), ids.end(), id, NaturalLess{});
  ids.insert(pos, id);
}

bool has_control_char(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return c < 0x20; });
}

}  // namespace

std::string to_string(ElementKind kind) {
  return kind == ElementKind::Concept ? "concept" : "relation";
}

bool KnowledgeBase::add_element(Element element, const std::optional<ElementId>& parent) {
  if (elements.count(element.id)) return false;
  GraphBody* body = &root;
  if (parent) {
    auto it = elements.find(*parent);
    if (it == elements.end() || !it->second.nested) return false;
    body = &*it->second.nested;
  }
  insert_sorted_id(body->element_ids, element.id);
  elements.emplace(element.id, std::move(element));
  return true;
}

bool KnowledgeBase::add_arc(const Arc& arc) {
  GraphBody* body = nullptr;
  if (std::count(root.element_ids.begin(), root.element_ids.end(), arc.relation_id)) {
    body = &root;
  } else {
    for (auto& [id, element] : elements) {
      if (!element.nested) continue;
      auto& ids = element.nested->element_ids;
      if (std::count(ids.begin(), ids.end(), arc.relation_id)) {
        body = &*element.nested;
        break;
      }
    }
  }
  if (!body) return false;
  auto pos = std::lower_bound(body->arcs.begin(), body->arcs.end(), arc, arc_slot_less);
  body->arcs.insert(pos, arc);
  return true;
}

const Element* KnowledgeBase::find(const ElementId& id) const {
  auto it = elements.find(id);
  return it == elements.end() ? nullptr : &it->second;
}

std::string to_string(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::EmptyId: return "empty-id";
    case ViolationRule::ReservedId: return "reserved-id";
    case ViolationRule::DuplicateId: return "duplicate-id";
    case ViolationRule::OrphanElement: return "orphan-element";
    case ViolationRule::DanglingElement: return "dangling-element";
    case ViolationRule::EmptyTypeLabel: return "empty-type-label";
    case ViolationRule::ControlChar: return "control-char";
    case ViolationRule::RelationReferent: return "relation-referent";
    case ViolationRule::RelationNested: return "relation-nested";
    case ViolationRule::BadPresentation: return "bad-presentation";
    case ViolationRule::DanglingArc: return "dangling-arc";
    case ViolationRule::ArcEndpointKind: return "arc-endpoint-kind";
    case ViolationRule::BadArcPosition: return "bad-arc-position";
    case ViolationRule::DuplicateArcSlot: return "duplicate-arc-slot";
    case ViolationRule::CrossContextArc: return "cross-context-arc";
  }
  return "unknown";
}

std::string format_violation(const Violation& violation) {
  std::string out = to_string(violation.rule) + "(" + violation.id + ")";
  if (!violation.detail.empty()) out += ": " + violation.detail;
  return out;
}

std::vector<Violation> validate(const KnowledgeBase& kb) {
  std::vector<Violation> out;
  auto report = [&](ViolationRule rule, const ElementId& id, std::string detail) {
    out.push_back({rule, id, std::move(detail)});
  };

  // Walk every body once: root plus each context's nested body.
  struct BodyRef {
    const GraphBody* body;
    ElementId owner;  // kGraphId for root
  };
  std::vector<BodyRef> bodies;
  bodies.push_back({&kb.root, kGraphId});
  for (const auto& [id, element] : kb.elements) {
    if (element.nested) bodies.push_back({&*element.nested, id});
  }

  std::map<ElementId, ElementId, NaturalLess> placed;  // id -> owning body
  for (const auto& ref : bodies) {
    for (const auto& id : ref.body->element_ids) {
      if (!kb.elements.count(id)) {
        report(ViolationRule::DanglingElement, id,
               "listed in body of " + ref.owner + " but not defined");
        continue;
      }
      auto [it, inserted] = placed.emplace(id, ref.owner);
      if (!inserted) {
        report(ViolationRule::DuplicateId, id,
               "contained in both " + it->second + " and " + ref.owner);
      }
    }
  }

  for (const auto& [id, element] : kb.elements) {
    if (id.empty()) report(ViolationRule::EmptyId, id, "element with empty id");
    if (id == kGraphId) report(ViolationRule::ReservedId, id, "GRAPH is reserved");
    if (element.id != id)
      report(ViolationRule::DuplicateId, id, "map key does not match element id " + element.id);
    if (element.type_label.empty())
      report(ViolationRule::EmptyTypeLabel, id, "type label must not be empty");
    if (has_control_char(id) || has_control_char(element.type_label) ||
        (element.referent && has_control_char(*element.referent)) ||
        (element.presentation && element.presentation->color &&
         has_control_char(*element.presentation->color))) {
      report(ViolationRule::ControlChar, id, "control character in id, label, referent or color");
    }
    if (element.kind == ElementKind::Relation) {
      if (element.referent) report(ViolationRule::RelationReferent, id, "relations carry no referent");
      if (element.nested) report(ViolationRule::RelationNested, id, "relations carry no nested graph");
    }
    if (element.presentation) {
      const auto& p = *element.presentation;
      if ((p.width && *p.width <= 0) || (p.height && *p.height <= 0))
        report(ViolationRule::BadPresentation, id, "width/height must be positive");
    }
    if (!placed.count(id))
      report(ViolationRule::OrphanElement, id, "element belongs to no body");
  }

  std::set<std::pair<ElementId, int>> slots;
  for (const auto& ref : bodies) {
    for (const auto& arc : ref.body->arcs) {
      const Element* rel = kb.find(arc.relation_id);
      const Element* con = kb.find(arc.concept_id);
      if (!rel) report(ViolationRule::DanglingArc, arc.relation_id, "relation does not exist");
      if (!con) report(ViolationRule::DanglingArc, arc.concept_id, "concept does not exist");
      if (rel && rel->kind != ElementKind::Relation)
        report(ViolationRule::ArcEndpointKind, arc.relation_id, "arc source is not a relation");
      if (con && con->kind != ElementKind::Concept)
        report(ViolationRule::ArcEndpointKind, arc.concept_id, "arc target is not a concept");
      if (arc.position < 1)
        report(ViolationRule::BadArcPosition, arc.relation_id,
               "position " + std::to_string(arc.position) + " is not positive");
      if (!slots.insert({arc.relation_id, arc.position}).second)
        report(ViolationRule::DuplicateArcSlot, arc.relation_id,
               "position " + std::to_string(arc.position) + " used twice");
      auto rel_body = placed.find(arc.relation_id);
      auto con_body = placed.find(arc.concept_id);
      if (rel_body != placed.end() &&
          (rel_body->second != ref.owner ||
           (con_body != placed.end() && con_body->second != ref.owner))) {
        report(ViolationRule::CrossContextArc, arc.relation_id,
               "arc endpoints must share the body that holds the arc");
      }
    }
  }
  return out;
}

namespace {

const Element& require(const KnowledgeBase& kb, const ElementId& id) {
  const Element* element = kb.find(id);
  if (!element) throw std::invalid_argument("unknown element id: " + id);
  return *element;
}

}  // namespace

std::string describe(const KnowledgeBase& kb, const ElementId& id) {
  const Element& element = require(kb, id);
  if (element.kind == ElementKind::Concept && element.referent)
    return element.type_label + " : " + *element.referent;
  return element.type_label;
}

std::string describe_link(const KnowledgeBase& kb, const Arc& arc) {
  const Element& rel = require(kb, arc.relation_id);
  return "[" + rel.type_label + " -> " + describe(kb, arc.concept_id) + "] : " +
         std::to_string(arc.position);
}

ElementId parent_context(const KnowledgeBase& kb, const ElementId& id) {
  require(kb, id);
  auto index = parent_index(kb);
  auto it = index.find(id);
  if (it == index.end()) throw std::invalid_argument("element belongs to no body: " + id);
  return it->second;
}

std::map<ElementId, ElementId, NaturalLess> parent_index(const KnowledgeBase& kb) {
  std::map<ElementId, ElementId, NaturalLess> out;
  for (const auto& id : kb.root.element_ids) out.emplace(id, kGraphId);
  for (const auto& [id, element] : kb.elements) {
    if (!element.nested) continue;
    for (const auto& member : element.nested->element_ids) out.emplace(member, id);
  }
  return out;
}

std::vector<ElementId> containment_closure(const KnowledgeBase& kb, const ElementId& id) {
  std::vector<ElementId> out;
  if (id == kGraphId) {
    for (const auto& [eid, element] : kb.elements) out.push_back(eid);
    return out;
  }
  const Element& element = require(kb, id);
  if (!element.nested) throw std::invalid_argument("not a context: " + id);

  std::set<ElementId> seen = {id};
  std::vector<const GraphBody*> pending = {&*element.nested};
  while (!pending.empty()) {
    const GraphBody* body = pending.back();
    pending.pop_back();
    for (const auto& member : body->element_ids) {
      if (!seen.insert(member).second) continue;
      out.push_back(member);
      const Element* child = kb.find(member);
      if (child && child->nested) pending.push_back(&*child->nested);
    }
  }
  std::sort(out.begin(), out.end(), NaturalLess{});
  return out;
}

}  // namespace cgr
