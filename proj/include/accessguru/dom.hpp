#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace accessguru {

enum class NodeKind { Document, Element, Text, Comment, Doctype };

/// One node of the lenient HTML tree. Element tag and attribute names are
/// lowercased at parse time; attribute values keep their original text with
/// entities decoded. Duplicate attributes keep the first occurrence.
struct Node {
    NodeKind kind = NodeKind::Element;
    std::string tag;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string text;  // payload for Text / Comment / Doctype nodes
    std::vector<std::unique_ptr<Node>> children;
    Node* parent = nullptr;

    bool is_element() const { return kind == NodeKind::Element; }
    const std::string* attr(std::string_view name) const;
    bool has_attr(std::string_view name) const { return attr(name) != nullptr; }
    void set_attr(std::string_view name, std::string_view value);
    void remove_attr(std::string_view name);

    /// Concatenated text of all descendant text nodes.
    std::string text_content() const;

    std::unique_ptr<Node> clone() const;
};

/// Stable child-index address of a node within a Document. Valid for
/// read-only use; mutation of the tree may leave it dangling, in which
/// case resolve() returns nullptr.
struct NodeRef {
    std::vector<int> path;
    std::string tag;

    bool operator==(const NodeRef&) const = default;
    std::string path_string() const;  // "0.2.1"
};

class Document {
  public:
    Document();
    Document(Document&&) noexcept = default;
    Document& operator=(Document&&) noexcept = default;

    const Node& root() const { return *root_; }
    Node& root() { return *root_; }
    const std::string& source_text() const { return source_; }
    const std::string& base_url() const { return base_url_; }
    void set_base_url(std::string url) { base_url_ = std::move(url); }

    const Node* resolve(const NodeRef& ref) const;
    Node* resolve(const NodeRef& ref);
    NodeRef ref_of(const Node& node) const;

    /// Pre-order walk over all element nodes.
    void each_element(const std::function<void(const Node&)>& fn) const;
    std::vector<const Node*> elements() const;

    /// First element in document order with the given tag, or nullptr.
    const Node* first_element(std::string_view tag) const;

    Document clone() const;

    friend Document parse_document(std::string_view html);

  private:
    std::unique_ptr<Node> root_;  // NodeKind::Document
    std::string source_;
    std::string base_url_;
};

/// An HTML fragment paired with its canonical form (whitespace-collapsed,
/// attribute-order-canonicalized). Matching between LLM-echoed markup and
/// source documents happens on the normalized text.
struct HtmlSnippet {
    std::string text;
    std::string normalized;

    static HtmlSnippet of(std::string html);
};

/// Lenient parse: any byte string yields a tree, unparseable regions
/// degrade to text nodes. Never throws.
Document parse_document(std::string_view html);

/// Canonical serialization: lowercase tags, attributes sorted by name,
/// double-quoted values, minimal entity escaping. A fixed point after one
/// parse/serialize round trip.
std::string serialize_node(const Node& node);
std::string serialize_document(const Document& doc);

/// Serialize the node a ref addresses. Throws StaleNodeError if the ref no
/// longer resolves (node removed by mutation).
std::string serialize_node(const Document& doc, const NodeRef& ref);

struct StaleNodeError : std::runtime_error {
    explicit StaleNodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical form used for containment matching: parse + re-serialize with
/// whitespace-only text dropped, inner whitespace collapsed, comments and
/// doctypes stripped. Idempotent.
std::string normalize_html(std::string_view html);

/// Smallest element whose normalized serialization contains the snippet's
/// normalized form; nothing when no element matches. Ties broken by
/// document order.
std::optional<NodeRef> find_segment(const Document& doc, const HtmlSnippet& snippet);

/// sRGB color with alpha. Parses #RGB, #RRGGBB, rgb()/rgba() and the common
/// CSS named colors.
struct ColorValue {
    int r = 0, g = 0, b = 0;
    double alpha = 1.0;

    static std::optional<ColorValue> parse(std::string_view css);
    std::string hex() const;  // "#RRGGBB"
    bool operator==(const ColorValue&) const = default;
};

/// Foreground from the nearest self-or-ancestor inline `color`; background
/// from the nearest inline `background-color` or `background` color
/// component. Defaults #000000 on #FFFFFF. Unparseable values fall through
/// to the next ancestor. Results are composited to full opacity.
std::pair<ColorValue, ColorValue> resolve_colors(const Document& doc, const NodeRef& ref);

/// Inline-style declarations as (property, value) pairs; property names
/// lowercased, values trimmed but otherwise verbatim (including any
/// !important suffix).
std::vector<std::pair<std::string, std::string>> parse_inline_style(std::string_view style);

/// Value of an inline style property on the node itself, if declared.
std::optional<std::string> style_property(const Node& node, std::string_view property);

}  // namespace accessguru
