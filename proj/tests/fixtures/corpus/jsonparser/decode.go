package jsonparser

import "strconv"

type Value struct {
	kind     TokenKind
	text     string
	children []Value
}

func DecodeDocument(payload []byte) (Value, error) {
	lexer := &Lexer{input: payload}
	return decodeValue(lexer)
}

func decodeValue(lexer *Lexer) (Value, error) {
	kind, text, err := lexer.NextToken()
	if err != nil {
		return Value{}, err
	}
	return Value{kind: kind, text: string(text)}, nil
}

func (v Value) AsFloat() (float64, error) {
	return strconv.ParseFloat(v.text, 64)
}

func (v Value) AsInteger() (int64, error) {
	return strconv.ParseInt(v.text, 10, 64)
}
