package cryptowallet

import (
	"crypto/ecdsa"
	"crypto/elliptic"
	"crypto/rand"
	"crypto/sha256"
	"encoding/hex"
)

type Wallet struct {
	privateKey *ecdsa.PrivateKey
	address    string
}

func GenerateWallet() (*Wallet, error) {
	privateKey, err := ecdsa.GenerateKey(elliptic.P256(), rand.Reader)
	if err != nil {
		return nil, err
	}
	digest := sha256.Sum256(elliptic.Marshal(elliptic.P256(),
		privateKey.PublicKey.X, privateKey.PublicKey.Y))
	return &Wallet{
		privateKey: privateKey,
		address:    hex.EncodeToString(digest[:20]),
	}, nil
}

func (wallet *Wallet) Address() string {
	return wallet.address
}

func (wallet *Wallet) SignTransaction(tx *Transaction) ([]byte, error) {
	digest := tx.Hash()
	return ecdsa.SignASN1(rand.Reader, wallet.privateKey, digest[:])
}
