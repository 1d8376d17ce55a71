#include "reposim/language.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace reposim {

std::string_view language_name(LanguageTag tag) {
    switch (tag) {
        case LanguageTag::C: return "C";
        case LanguageTag::CSharp: return "C#";
        case LanguageTag::Cpp: return "C++";
        case LanguageTag::Go: return "Go";
        case LanguageTag::Haskell: return "Haskell";
        case LanguageTag::Java: return "Java";
        case LanguageTag::JavaScript: return "JavaScript";
        case LanguageTag::Kotlin: return "Kotlin";
        case LanguageTag::Php: return "PHP";
        case LanguageTag::Python: return "Python";
        case LanguageTag::Ruby: return "Ruby";
        case LanguageTag::Rust: return "Rust";
        case LanguageTag::Scala: return "Scala";
        case LanguageTag::Shell: return "Shell";
        case LanguageTag::Swift: return "Swift";
        case LanguageTag::TypeScript: return "TypeScript";
        case LanguageTag::Unknown: break;
    }
    return "Unknown";
}

namespace {

const std::unordered_map<std::string, LanguageTag>& extension_map() {
    static const std::unordered_map<std::string, LanguageTag> map = {
        {".c", LanguageTag::C},
        {".h", LanguageTag::C},
        {".cs", LanguageTag::CSharp},
        {".cpp", LanguageTag::Cpp},
        {".cc", LanguageTag::Cpp},
        {".cxx", LanguageTag::Cpp},
        {".c++", LanguageTag::Cpp},
        {".hpp", LanguageTag::Cpp},
        {".hh", LanguageTag::Cpp},
        {".hxx", LanguageTag::Cpp},
        {".h++", LanguageTag::Cpp},
        {".go", LanguageTag::Go},
        {".hs", LanguageTag::Haskell},
        {".java", LanguageTag::Java},
        {".js", LanguageTag::JavaScript},
        {".mjs", LanguageTag::JavaScript},
        {".cjs", LanguageTag::JavaScript},
        {".jsx", LanguageTag::JavaScript},
        {".kt", LanguageTag::Kotlin},
        {".kts", LanguageTag::Kotlin},
        {".php", LanguageTag::Php},
        {".py", LanguageTag::Python},
        {".pyw", LanguageTag::Python},
        {".rb", LanguageTag::Ruby},
        {".rake", LanguageTag::Ruby},
        {".rs", LanguageTag::Rust},
        {".scala", LanguageTag::Scala},
        {".sc", LanguageTag::Scala},
        {".sh", LanguageTag::Shell},
        {".bash", LanguageTag::Shell},
        {".zsh", LanguageTag::Shell},
        {".swift", LanguageTag::Swift},
        {".ts", LanguageTag::TypeScript},
        {".tsx", LanguageTag::TypeScript},
    };
    return map;
}

const std::unordered_map<std::string, LanguageTag>& basename_map() {
    static const std::unordered_map<std::string, LanguageTag> map = {
        {"Rakefile", LanguageTag::Ruby},
        {"Gemfile", LanguageTag::Ruby},
    };
    return map;
}

}  // namespace

LanguageTag detect_language(const std::filesystem::path& path) {
    std::string base = path.filename().string();
    if (auto it = basename_map().find(base); it != basename_map().end()) return it->second;
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (auto it = extension_map().find(ext); it != extension_map().end()) return it->second;
    return LanguageTag::Unknown;
}

namespace {

std::unordered_set<std::string> make_set(std::initializer_list<const char*> words) {
    std::unordered_set<std::string> s;
    for (const char* w : words) s.insert(w);
    return s;
}

const std::unordered_set<std::string>& c_keywords() {
    static const auto kw = make_set({
        "auto", "break", "case", "char", "const", "continue", "default", "do", "double",
        "else", "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long",
        "register", "restrict", "return", "short", "signed", "sizeof", "static", "struct",
        "switch", "typedef", "union", "unsigned", "void", "volatile", "while", "_Bool",
        "_Complex", "_Imaginary", "_Static_assert", "_Alignas", "_Alignof", "_Atomic",
        "_Generic", "_Noreturn", "_Thread_local", "NULL", "true", "false",
    });
    return kw;
}

const std::unordered_set<std::string>& cpp_keywords() {
    static const auto kw = make_set({
        "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool",
        "break", "case", "catch", "char", "char8_t", "char16_t", "char32_t", "class",
        "compl", "concept", "const", "consteval", "constexpr", "constinit", "const_cast",
        "continue", "co_await", "co_return", "co_yield", "decltype", "default", "delete",
        "do", "double", "dynamic_cast", "else", "enum", "explicit", "export", "extern",
        "false", "float", "for", "friend", "goto", "if", "inline", "int", "long",
        "mutable", "namespace", "new", "noexcept", "not", "not_eq", "nullptr", "operator",
        "or", "or_eq", "private", "protected", "public", "register", "reinterpret_cast",
        "requires", "return", "short", "signed", "sizeof", "static", "static_assert",
        "static_cast", "struct", "switch", "template", "this", "thread_local", "throw",
        "true", "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
        "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq", "override",
        "final", "NULL",
    });
    return kw;
}

const std::unordered_set<std::string>& csharp_keywords() {
    static const auto kw = make_set({
        "abstract", "as", "base", "bool", "break", "byte", "case", "catch", "char",
        "checked", "class", "const", "continue", "decimal", "default", "delegate", "do",
        "double", "else", "enum", "event", "explicit", "extern", "false", "finally",
        "fixed", "float", "for", "foreach", "goto", "if", "implicit", "in", "int",
        "interface", "internal", "is", "lock", "long", "namespace", "new", "null",
        "object", "operator", "out", "override", "params", "private", "protected",
        "public", "readonly", "ref", "return", "sbyte", "sealed", "short", "sizeof",
        "stackalloc", "static", "string", "struct", "switch", "this", "throw", "true",
        "try", "typeof", "uint", "ulong", "unchecked", "unsafe", "ushort", "using",
        "virtual", "void", "volatile", "while", "var", "async", "await", "yield",
    });
    return kw;
}

const std::unordered_set<std::string>& go_keywords() {
    static const auto kw = make_set({
        "break", "case", "chan", "const", "continue", "default", "defer", "else",
        "fallthrough", "for", "func", "go", "goto", "if", "import", "interface", "map",
        "package", "range", "return", "select", "struct", "switch", "type", "var",
        "nil", "true", "false", "iota",
    });
    return kw;
}

const std::unordered_set<std::string>& haskell_keywords() {
    static const auto kw = make_set({
        "case", "class", "data", "default", "deriving", "do", "else", "foreign", "if",
        "import", "in", "infix", "infixl", "infixr", "instance", "let", "module",
        "newtype", "of", "then", "type", "where",
    });
    return kw;
}

const std::unordered_set<std::string>& java_keywords() {
    static const auto kw = make_set({
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
        "class", "const", "continue", "default", "do", "double", "else", "enum",
        "extends", "final", "finally", "float", "for", "goto", "if", "implements",
        "import", "instanceof", "int", "interface", "long", "native", "new", "package",
        "private", "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
        "void", "volatile", "while", "true", "false", "null", "var", "record", "sealed",
        "permits", "yield",
    });
    return kw;
}

const std::unordered_set<std::string>& javascript_keywords() {
    static const auto kw = make_set({
        "break", "case", "catch", "class", "const", "continue", "debugger", "default",
        "delete", "do", "else", "export", "extends", "finally", "for", "function", "if",
        "import", "in", "instanceof", "new", "return", "super", "switch", "this",
        "throw", "try", "typeof", "var", "void", "while", "with", "yield", "let",
        "static", "async", "await", "of", "get", "set", "true", "false", "null",
        "undefined",
    });
    return kw;
}

const std::unordered_set<std::string>& kotlin_keywords() {
    static const auto kw = make_set({
        "as", "break", "class", "continue", "do", "else", "false", "for", "fun", "if",
        "in", "interface", "is", "null", "object", "package", "return", "super", "this",
        "throw", "true", "try", "typealias", "typeof", "val", "var", "when", "while",
        "by", "catch", "constructor", "delegate", "dynamic", "field", "file", "finally",
        "get", "import", "init", "param", "property", "receiver", "set", "setparam",
        "where", "abstract", "annotation", "companion", "const", "crossinline", "data",
        "enum", "expect", "external", "final", "infix", "inline", "inner", "internal",
        "lateinit", "noinline", "open", "operator", "out", "override", "private",
        "protected", "public", "reified", "sealed", "suspend", "tailrec", "vararg",
        "actual",
    });
    return kw;
}

const std::unordered_set<std::string>& php_keywords() {
    static const auto kw = make_set({
        "abstract", "and", "array", "as", "break", "callable", "case", "catch", "class",
        "clone", "const", "continue", "declare", "default", "do", "echo", "else",
        "elseif", "empty", "enddeclare", "endfor", "endforeach", "endif", "endswitch",
        "endwhile", "enum", "extends", "final", "finally", "fn", "for", "foreach",
        "function", "global", "goto", "if", "implements", "include", "include_once",
        "instanceof", "insteadof", "interface", "isset", "list", "match", "namespace",
        "new", "or", "print", "private", "protected", "public", "readonly", "require",
        "require_once", "return", "static", "switch", "throw", "trait", "try", "unset",
        "use", "var", "while", "xor", "yield", "true", "false", "null",
    });
    return kw;
}

const std::unordered_set<std::string>& python_keywords() {
    static const auto kw = make_set({
        "False", "None", "True", "and", "as", "assert", "async", "await", "break",
        "class", "continue", "def", "del", "elif", "else", "except", "finally", "for",
        "from", "global", "if", "import", "in", "is", "lambda", "nonlocal", "not", "or",
        "pass", "raise", "return", "try", "while", "with", "yield",
    });
    return kw;
}

const std::unordered_set<std::string>& ruby_keywords() {
    static const auto kw = make_set({
        "BEGIN", "END", "alias", "and", "begin", "break", "case", "class", "def",
        "defined?", "do", "else", "elsif", "end", "ensure", "false", "for", "if", "in",
        "module", "next", "nil", "not", "or", "redo", "rescue", "retry", "return",
        "self", "super", "then", "true", "undef", "unless", "until", "when", "while",
        "yield",
    });
    return kw;
}

const std::unordered_set<std::string>& rust_keywords() {
    static const auto kw = make_set({
        "as", "async", "await", "break", "const", "continue", "crate", "dyn", "else",
        "enum", "extern", "false", "fn", "for", "if", "impl", "in", "let", "loop",
        "match", "mod", "move", "mut", "pub", "ref", "return", "self", "Self", "static",
        "struct", "super", "trait", "true", "type", "union", "unsafe", "use", "where",
        "while",
    });
    return kw;
}

const std::unordered_set<std::string>& scala_keywords() {
    static const auto kw = make_set({
        "abstract", "case", "catch", "class", "def", "do", "else", "enum", "export",
        "extends", "false", "final", "finally", "for", "forSome", "given", "if",
        "implicit", "import", "lazy", "match", "new", "null", "object", "override",
        "package", "private", "protected", "return", "sealed", "super", "then", "this",
        "throw", "trait", "true", "try", "type", "val", "var", "while", "with", "yield",
        "extension", "using",
    });
    return kw;
}

const std::unordered_set<std::string>& shell_keywords() {
    static const auto kw = make_set({
        "if", "then", "else", "elif", "fi", "case", "esac", "for", "while", "until",
        "do", "done", "in", "function", "select", "time", "coproc", "local", "return",
        "exit", "export", "readonly", "shift", "unset",
    });
    return kw;
}

const std::unordered_set<std::string>& swift_keywords() {
    static const auto kw = make_set({
        "associatedtype", "class", "deinit", "enum", "extension", "fileprivate", "func",
        "import", "init", "inout", "internal", "let", "open", "operator", "private",
        "precedencegroup", "protocol", "public", "rethrows", "static", "struct",
        "subscript", "typealias", "var", "break", "case", "catch", "continue", "default",
        "defer", "do", "else", "fallthrough", "for", "guard", "if", "in", "repeat",
        "return", "switch", "throw", "throws", "try", "where", "while", "as", "Any",
        "false", "is", "nil", "self", "Self", "super", "true", "async", "await", "actor",
        "some", "any",
    });
    return kw;
}

const std::unordered_set<std::string>& typescript_keywords() {
    static const auto kw = make_set({
        "break", "case", "catch", "class", "const", "continue", "debugger", "default",
        "delete", "do", "else", "export", "extends", "finally", "for", "function", "if",
        "import", "in", "instanceof", "new", "return", "super", "switch", "this",
        "throw", "try", "typeof", "var", "void", "while", "with", "yield", "let",
        "static", "async", "await", "of", "get", "set", "true", "false", "null",
        "undefined", "type", "interface", "enum", "namespace", "declare", "readonly",
        "abstract", "implements", "private", "protected", "public", "keyof", "infer",
        "never", "unknown", "any", "number", "string", "boolean", "symbol", "object",
        "bigint", "is", "as", "satisfies", "module",
    });
    return kw;
}

const std::unordered_set<std::string>& empty_keywords() {
    static const std::unordered_set<std::string> kw;
    return kw;
}

}  // namespace

const std::unordered_set<std::string>& language_keywords(LanguageTag tag) {
    switch (tag) {
        case LanguageTag::C: return c_keywords();
        case LanguageTag::CSharp: return csharp_keywords();
        case LanguageTag::Cpp: return cpp_keywords();
        case LanguageTag::Go: return go_keywords();
        case LanguageTag::Haskell: return haskell_keywords();
        case LanguageTag::Java: return java_keywords();
        case LanguageTag::JavaScript: return javascript_keywords();
        case LanguageTag::Kotlin: return kotlin_keywords();
        case LanguageTag::Php: return php_keywords();
        case LanguageTag::Python: return python_keywords();
        case LanguageTag::Ruby: return ruby_keywords();
        case LanguageTag::Rust: return rust_keywords();
        case LanguageTag::Scala: return scala_keywords();
        case LanguageTag::Shell: return shell_keywords();
        case LanguageTag::Swift: return swift_keywords();
        case LanguageTag::TypeScript: return typescript_keywords();
        case LanguageTag::Unknown: break;
    }
    return empty_keywords();
}

}  // namespace reposim
